"""Exact rational linear algebra kernel.

Every representation-theoretic computation in this package reduces to rank,
kernel, span-closure and trace-form problems for matrices with small rational
entries.  Everything here is exact: entries are Python ints or
``fractions.Fraction`` (the two interoperate transparently), and subspaces are
kept in reduced row echelon form with a fixed column order, so that equality
of subspaces is literal equality of their canonical bases.

>>> rank(QMat([[1, 2], [2, 4]]))
1
>>> kernel(QMat([[1, 1]])).basis
((Fraction(1, 1), Fraction(-1, 1)),)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product

Scalar = int | Fraction


class GuardError(ValueError):
    """A size guard was exceeded before any allocation."""


class QMat:
    """Immutable dense matrix over the rationals.

    Rows are tuples; entries are ints or Fractions.  Arithmetic is naive,
    which is fine at desk scale, and stays in int arithmetic whenever the
    inputs are integral.
    """

    __slots__ = ("rows",)

    def __init__(self, rows):
        self.rows = tuple(tuple(row) for row in rows)
        if self.rows:
            width = len(self.rows[0])
            if any(len(row) != width for row in self.rows):
                raise ValueError("ragged rows")

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @classmethod
    def identity(cls, n: int) -> "QMat":
        return cls([[1 if i == j else 0 for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, nrows: int, ncols: int) -> "QMat":
        return cls([[0] * ncols for _ in range(nrows)])

    def __eq__(self, other) -> bool:
        return isinstance(other, QMat) and self.rows == other.rows

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"QMat({[list(r) for r in self.rows]})"

    def __add__(self, other: "QMat") -> "QMat":
        return QMat([[a + b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __sub__(self, other: "QMat") -> "QMat":
        return QMat([[a - b for a, b in zip(r, s)] for r, s in zip(self.rows, other.rows)])

    def __neg__(self) -> "QMat":
        return QMat([[-a for a in r] for r in self.rows])

    def scale(self, c: Scalar) -> "QMat":
        return QMat([[c * a for a in r] for r in self.rows])

    def __mul__(self, other: "QMat") -> "QMat":
        if self.ncols != other.nrows:
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} * {other.nrows}x{other.ncols}")
        cols = list(zip(*other.rows)) if other.rows else []
        return QMat([[sum(a * b for a, b in zip(row, col) if a and b) for col in cols]
                     for row in self.rows])

    def transpose(self) -> "QMat":
        return QMat(list(zip(*self.rows))) if self.rows else QMat([])

    def trace(self) -> Scalar:
        return sum(self.rows[i][i] for i in range(min(self.nrows, self.ncols)))

    def is_zero(self) -> bool:
        return all(not a for row in self.rows for a in row)

    def vec(self) -> tuple:
        """Row-major flattening."""
        return tuple(a for row in self.rows for a in row)

    def apply(self, vector) -> tuple:
        """Matrix times column vector."""
        return tuple(sum(a * x for a, x in zip(row, vector) if a and x) for row in self.rows)


def mat_from_vec(vector, nrows: int, ncols: int) -> QMat:
    """Inverse of :meth:`QMat.vec` for the given shape."""
    return QMat([vector[i * ncols:(i + 1) * ncols] for i in range(nrows)])


def trace_product(a: QMat, b: QMat) -> Scalar:
    """trace(a*b) in O(n^2), without forming the product."""
    return sum(x * y
               for i, row in enumerate(a.rows)
               for j, x in enumerate(row)
               if x
               for y in (b.rows[j][i],)
               if y)


class SpanBuilder:
    """Incremental reduced row echelon span of vectors of a fixed length.

    Rows are kept fully reduced (pivot columns eliminated everywhere, pivots
    normalised to 1) so the final basis is the canonical RREF basis.
    """

    def __init__(self, ambient_dim: int):
        self.ambient_dim = ambient_dim
        self.rows: list[list[Scalar]] = []
        self.pivots: list[int] = []

    @property
    def dim(self) -> int:
        return len(self.rows)

    def reduce(self, vector) -> list[Scalar]:
        v = list(vector)
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if c:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        v[j] -= c * row[j]
        return v

    def add(self, vector) -> bool:
        """Add a vector to the span; return True when it was independent."""
        v = self.reduce(vector)
        p = next((j for j, c in enumerate(v) if c), None)
        if p is None:
            return False
        inv = Fraction(1, 1) / v[p]
        v = [c * inv for c in v]
        for row in self.rows:
            c = row[p]
            if c:
                for j in range(p, self.ambient_dim):
                    if v[j]:
                        row[j] -= c * v[j]
        k = next((i for i, q in enumerate(self.pivots) if q > p), len(self.pivots))
        self.rows.insert(k, v)
        self.pivots.insert(k, p)
        return True

    def contains(self, vector) -> bool:
        return all(not c for c in self.reduce(vector))

    def coords(self, vector):
        """Coordinates of a member vector in the current basis, or None."""
        v = list(vector)
        out = []
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            out.append(c)
            if c:
                for j in range(p, self.ambient_dim):
                    if row[j]:
                        v[j] -= c * row[j]
        if any(v):
            return None
        return tuple(out)

    def subspace(self) -> "Subspace":
        return Subspace(self.ambient_dim, tuple(tuple(r) for r in self.rows))


@dataclass(frozen=True)
class Subspace:
    """A subspace of Q^ambient_dim with a canonical RREF row basis.

    Two Subspace values are equal exactly when they are the same subspace.
    """

    ambient_dim: int
    basis: tuple[tuple[Scalar, ...], ...]

    @classmethod
    def from_vectors(cls, ambient_dim: int, vectors) -> "Subspace":
        sb = SpanBuilder(ambient_dim)
        for v in vectors:
            sb.add(v)
        return sb.subspace()

    @classmethod
    def zero(cls, ambient_dim: int) -> "Subspace":
        return cls(ambient_dim, ())

    @classmethod
    def full(cls, ambient_dim: int) -> "Subspace":
        return cls.from_vectors(ambient_dim, QMat.identity(ambient_dim).rows)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def contains(self, vector) -> bool:
        sb = self._builder()
        return sb.contains(vector)

    def coords(self, vector):
        return self._builder().coords(vector)

    def contains_subspace(self, other: "Subspace") -> bool:
        sb = self._builder()
        return all(sb.contains(v) for v in other.basis)

    def _builder(self) -> SpanBuilder:
        sb = SpanBuilder(self.ambient_dim)
        sb.rows = [list(r) for r in self.basis]
        sb.pivots = [next(j for j, c in enumerate(r) if c) for r in self.basis]
        return sb


def rref(m: QMat) -> tuple[QMat, list[int]]:
    """Reduced row echelon form together with the pivot column list."""
    sb = SpanBuilder(m.ncols)
    for row in m.rows:
        sb.add(row)
    return QMat(sb.rows), list(sb.pivots)


def rank(m: QMat) -> int:
    """Rank over the rationals."""
    return rref(m)[1].__len__()


def kernel(m: QMat) -> Subspace:
    """Right null space; dim(kernel) + rank = number of columns."""
    n = m.ncols
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    vectors = []
    for f in free:
        v = [0] * n
        v[f] = 1
        for row, p in zip(reduced.rows, pivots):
            v[p] = -row[f]
        vectors.append(v)
    return Subspace.from_vectors(n, vectors)


def solve_intertwiner(gens_m: list[QMat], gens_n: list[QMat]) -> Subspace:
    """All linear maps T with T . gens_m[k] = gens_n[k] . T for every k.

    Returned as a subspace of the (dim N x dim M)-matrix space, flattened
    row-major; when the generator lists generate the acting algebras on both
    sides, its dimension is dim Hom(M, N).
    """
    if len(gens_m) != len(gens_n):
        raise ValueError("generator lists must have equal length")
    dm = gens_m[0].nrows if gens_m else 0
    dn = gens_n[0].nrows if gens_n else 0
    for g in gens_m:
        if g.nrows != dm or g.ncols != dm:
            raise ValueError("dimension mismatch in gens_m")
    for g in gens_n:
        if g.nrows != dn or g.ncols != dn:
            raise ValueError("dimension mismatch in gens_n")
    if dm == 0 or dn == 0:
        return Subspace.full(dn * dm)
    rows = []
    for a, b in zip(gens_m, gens_n):
        # (T a - b T)_{ij} = sum_m T_{im} a_{mj} - sum_m b_{im} T_{mj}
        for i in range(dn):
            for j in range(dm):
                row = [0] * (dn * dm)
                for m_ in range(dm):
                    row[i * dm + m_] += a.rows[m_][j]
                for m_ in range(dn):
                    row[m_ * dm + j] -= b.rows[i][m_]
                rows.append(row)
    return kernel(QMat(rows))


def hom_basis(gens_m: list[QMat], gens_n: list[QMat]) -> list[QMat]:
    """The intertwiner space as a list of matrices (canonical basis)."""
    dm = gens_m[0].nrows if gens_m else 0
    dn = gens_n[0].nrows if gens_n else 0
    sub = solve_intertwiner(gens_m, gens_n)
    return [mat_from_vec(v, dn, dm) for v in sub.basis]


def algebra_closure(gens: list[QMat], dim: int | None = None) -> list[QMat]:
    """Basis of the unital matrix subalgebra generated by ``gens``.

    The identity is adjoined automatically; the basis is saturated under left
    multiplication by the generators, in BFS order, which makes the output
    deterministic.  ``dim`` is only needed when ``gens`` is empty.
    """
    if gens:
        d = gens[0].nrows
        for g in gens:
            if g.nrows != d or g.ncols != d:
                raise ValueError("generators must be square of equal size")
    elif dim is None:
        raise ValueError("dim required when gens is empty")
    else:
        d = dim
    span = SpanBuilder(d * d)
    basis: list[QMat] = []
    queue: list[QMat] = []
    ident = QMat.identity(d)
    if span.add(ident.vec()):
        basis.append(ident)
        queue.append(ident)
    while queue:
        b = queue.pop(0)
        for g in gens:
            prod = g * b
            if span.add(prod.vec()):
                basis.append(prod)
                queue.append(prod)
    return basis


def radical_trace_form(alg_basis: list[QMat]) -> Subspace:
    """Jacobson radical of a matrix algebra, in alg_basis coordinates.

    In characteristic zero the radical is the kernel of the trace form
    (x, y) -> trace(xy) restricted to the algebra.
    """
    k = len(alg_basis)
    gram = QMat([[trace_product(alg_basis[i], alg_basis[j]) for j in range(k)]
                 for i in range(k)])
    return kernel(gram)


def radical_matrices(alg_basis: list[QMat]) -> list[QMat]:
    """The radical of the algebra as a list of matrices."""
    sub = radical_trace_form(alg_basis)
    out = []
    for coeffs in sub.basis:
        m = QMat.zeros(alg_basis[0].nrows, alg_basis[0].ncols) if alg_basis else QMat([])
        for c, b in zip(coeffs, alg_basis):
            if c:
                m = m + b.scale(c)
        out.append(m)
    return out


def invertible_combination(mats: list[QMat], seed: int = 0, tries: int = 200) -> QMat | None:
    """Search the span of square matrices for an invertible element.

    Deterministic small-integer grid first, then seeded random combinations.
    Returns None when no invertible element is found (for the hom spaces in
    this package that reliably signals 'not isomorphic').
    """
    if not mats:
        return None
    d = mats[0].nrows
    if d != mats[0].ncols:
        return None

    def is_invertible(m: QMat) -> bool:
        return rank(m) == d

    for m in mats:
        if is_invertible(m):
            return m
    h = len(mats)
    if h > 1 and h <= 4:
        for coeffs in product(range(-2, 3), repeat=h):
            if all(c == 0 for c in coeffs):
                continue
            m = mats[0].scale(coeffs[0])
            for c, b in zip(coeffs[1:], mats[1:]):
                m = m + b.scale(c)
            if is_invertible(m):
                return m
    elif h > 4:
        import random

        rng = random.Random(seed)
        for _ in range(tries):
            coeffs = [rng.randint(-5, 5) for _ in range(h)]
            m = mats[0].scale(coeffs[0])
            for c, b in zip(coeffs[1:], mats[1:]):
                m = m + b.scale(c)
            if is_invertible(m):
                return m
    return None
