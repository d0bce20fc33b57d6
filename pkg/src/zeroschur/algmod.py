"""The universal finite-dimensional module record and its structure theory.

An AlgModule is a labeled basis plus one exact rational action matrix per
algebra generator.  The same container carries modules over the 0-Hecke
algebra (generators pi_1..pi_{r-1}, acting in the pibar normalisation), the
0-Schur algebra (generators e_i, f_i plus a weight map that realises every
k_lambda as a diagonal projection) and the degenerate quantum group
(generators e_i, f_i, k_1..k_n).

Radicals and socles are computed through the represented algebra: close the
generator matrices into a matrix algebra, take its trace-form radical J, and
form J.M resp. the annihilator of J in M.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .compositions import Composition, weak_compositions
from .exactlin import (
    QMat,
    SpanBuilder,
    Subspace,
    algebra_closure,
    hom_basis,
    invertible_combination,
    kernel,
    radical_matrices,
    rref,
)

HECKE = "hecke"
SCHUR = "schur"
UQ0 = "uq0"


@dataclass(eq=False)
class AlgModule:
    """A module given by generator action matrices on a labeled basis.

    tag      -- which algebra acts ("hecke", "schur", "uq0")
    params   -- (r,) for hecke, (n, r) for schur and uq0
    labels   -- basis labels, in a fixed order
    actions  -- generator name -> action matrix (square, size = len(labels))
    weights  -- label -> weight composition; required for schur (it encodes
                every k_lambda action), optional elsewhere
    """

    tag: str
    params: tuple[int, ...]
    labels: tuple
    actions: dict[str, QMat]
    weights: dict | None = field(default=None)

    def __post_init__(self):
        d = len(self.labels)
        for name, m in self.actions.items():
            if m.nrows != d or m.ncols != d:
                raise ValueError(f"action {name} has wrong shape for dim {d}")
        if self.tag == SCHUR and self.weights is None:
            raise ValueError("schur modules need a weight map")

    @property
    def dim(self) -> int:
        return len(self.labels)

    def generator_names(self) -> list[str]:
        """Canonical generator order for the tagged algebra."""
        if self.tag == HECKE:
            r = self.params[0]
            return [f"pi{i}" for i in range(1, r)]
        if self.tag == SCHUR:
            n = self.params[0]
            return [f"e{i}" for i in range(1, n)] + [f"f{i}" for i in range(1, n)]
        if self.tag == UQ0:
            n = self.params[0]
            return ([f"e{i}" for i in range(1, n)] + [f"f{i}" for i in range(1, n)]
                    + [f"k{i}" for i in range(1, n + 1)])
        raise ValueError(f"unknown tag {self.tag}")

    def action(self, name: str) -> QMat:
        return self.actions[name]

    def weight_projection(self, lam: Composition) -> QMat:
        """The diagonal projection onto the lam weight space."""
        return QMat([[1 if (i == j and self.weights[self.labels[i]] == lam) else 0
                      for j in range(self.dim)] for i in range(self.dim)])

    def intertwining_generators(self) -> list[QMat]:
        """Action matrices whose commutant is End over the tagged algebra.

        For schur modules this includes one projection per weight in
        Lambda(n, r), so that intertwiners respect every k_lambda.
        """
        mats = [self.actions[name] for name in self.generator_names()]
        if self.tag == SCHUR:
            n, r = self.params
            mats += [self.weight_projection(lam) for lam in weak_compositions(n, r)]
        return mats


def zero_module(tag: str, params: tuple[int, ...]) -> AlgModule:
    weights = {} if tag == SCHUR else None
    stub = AlgModule(tag, params, (), {}, weights=weights)
    return AlgModule(tag, params, (),
                     {name: QMat([]) for name in stub.generator_names()},
                     weights=weights)


def solve_in_basis(basis_vectors: list, vector) -> list:
    """Coordinates of ``vector`` in an independent spanning set, by RREF solve."""
    k = len(basis_vectors)
    d = len(vector)
    aug = QMat([[basis_vectors[j][i] for j in range(k)] + [vector[i]]
                for i in range(d)])
    reduced, pivots = rref(aug)
    x = [0] * k
    for row, p in zip(reduced.rows, pivots):
        if p == k:
            raise ValueError("vector outside the span")
        x[p] = row[-1]
    return x


def represented_algebra(module: AlgModule) -> list[QMat]:
    """Basis of the image of the acting algebra inside End(module)."""
    return algebra_closure(module.intertwining_generators(), dim=module.dim)


def radical_subspace(module: AlgModule, alg: list[QMat] | None = None) -> Subspace:
    """rad(M) = J.M for J the trace-form radical of the represented algebra."""
    if module.dim == 0:
        return Subspace.zero(0)
    rad = radical_matrices(alg if alg is not None else represented_algebra(module))
    vectors = [tuple(j.rows[i][col] for i in range(module.dim))
               for j in rad for col in range(module.dim)]
    return Subspace.from_vectors(module.dim, vectors)


def socle_subspace(module: AlgModule, alg: list[QMat] | None = None) -> Subspace:
    """soc(M) = annihilator in M of the radical of the represented algebra."""
    if module.dim == 0:
        return Subspace.zero(0)
    rad = radical_matrices(alg if alg is not None else represented_algebra(module))
    if not rad:
        return Subspace.full(module.dim)
    return kernel(QMat([row for j in rad for row in j.rows]))


def _graded_basis_vectors(module: AlgModule, sub: Subspace) -> list[tuple]:
    """(weight, vector) pairs spanning a weight-invariant subspace.

    Weight-homogeneous vectors, weights in lex order; falls back to the RREF
    basis with weight None when the module has no weight map.
    """
    if module.weights is None:
        return [(None, v) for v in sub.basis]
    weights = sorted({module.weights[lab] for lab in module.labels})
    out = []
    for lam in weights:
        proj = module.weight_projection(lam)
        graded = Subspace.from_vectors(module.dim, [proj.apply(v) for v in sub.basis])
        out.extend((lam, v) for v in graded.basis)
    assert len(out) == sub.dim, "subspace is not weight-invariant"
    return out


def submodule(module: AlgModule, sub: Subspace, label_prefix: str = "v") -> AlgModule:
    """Restrict the module structure to an invariant subspace."""
    graded = _graded_basis_vectors(module, sub)
    basis_vectors = [v for _, v in graded]
    labels = tuple(f"{label_prefix}{k}" for k in range(len(basis_vectors)))
    new_weights = None
    if module.weights is not None:
        new_weights = {lab: lam for lab, (lam, _) in zip(labels, graded)}
    actions = {}
    for name in module.generator_names():
        mat = module.actions[name]
        cols = [solve_in_basis(basis_vectors, mat.apply(v)) for v in basis_vectors]
        actions[name] = QMat(list(zip(*cols))) if cols else QMat([])
    return AlgModule(module.tag, module.params, labels, actions, weights=new_weights)


def quotient_module(module: AlgModule, sub: Subspace, keep_labels: bool = True) -> AlgModule:
    """Quotient of the module by an invariant subspace.

    The quotient basis consists of the non-pivot ambient coordinates of the
    subspace; RREF rows of a weight-invariant subspace are automatically
    weight-homogeneous, so label weights carry over unchanged.
    """
    d = module.dim
    sb = SpanBuilder(d)
    for v in sub.basis:
        sb.add(v)
    pivot_set = set(sb.pivots)
    free = [j for j in range(d) if j not in pivot_set]

    def project(vector):
        reduced = sb.reduce(vector)
        return [reduced[j] for j in free]

    labels = tuple(module.labels[j] for j in free) if keep_labels else tuple(range(len(free)))
    actions = {}
    for name in module.generator_names():
        mat = module.actions[name]
        cols = []
        for j in free:
            unit = [0] * d
            unit[j] = 1
            cols.append(project(mat.apply(unit)))
        actions[name] = QMat(list(zip(*cols))) if cols else QMat([])
    new_weights = None
    if module.weights is not None:
        new_weights = {lab: module.weights[lab] for lab in labels}
    return AlgModule(module.tag, module.params, labels, actions, weights=new_weights)


def subquotient_module(module: AlgModule, outer: Subspace, inner: Subspace) -> AlgModule:
    """The module outer/inner for nested invariant subspaces."""
    graded = _graded_basis_vectors(module, outer)
    basis_vectors = [v for _, v in graded]
    restricted = submodule(module, outer)
    inner_coords = [solve_in_basis(basis_vectors, v) for v in inner.basis]
    return quotient_module(restricted, Subspace.from_vectors(restricted.dim, inner_coords))


def radical_filtration(module: AlgModule) -> list[AlgModule]:
    """Semisimple layers M/JM, JM/J^2M, ... of the radical filtration."""
    if module.dim == 0:
        return []
    rad = radical_matrices(represented_algebra(module))
    layers = []
    current = Subspace.full(module.dim)
    while current.dim > 0:
        nxt = Subspace.from_vectors(
            module.dim, [j.apply(v) for j in rad for v in current.basis])
        layers.append(subquotient_module(module, current, nxt))
        assert nxt.dim < current.dim, "radical filtration did not descend"
        current = nxt
    return layers


def hom_space(m: AlgModule, n: AlgModule) -> list[QMat]:
    """Basis of Hom(m, n) over the tagged algebra, as matrices dim n x dim m."""
    if (m.tag, m.params) != (n.tag, n.params):
        raise ValueError("hom between modules over different algebras")
    return hom_basis(m.intertwining_generators(), n.intertwining_generators())


def hom_dim(m: AlgModule, n: AlgModule) -> int:
    if m.dim == 0 or n.dim == 0:
        return 0
    return len(hom_space(m, n))


def find_isomorphism(m: AlgModule, n: AlgModule, seed: int = 0) -> QMat | None:
    """An invertible intertwiner m -> n, or None when none exists."""
    if m.dim != n.dim:
        return None
    if m.dim == 0:
        return QMat([])
    return invertible_combination(hom_space(m, n), seed=seed)


def cyclic_span_dim(module: AlgModule, vector, alg: list[QMat] | None = None) -> int:
    """Dimension of the submodule generated by one vector."""
    basis = alg if alg is not None else represented_algebra(module)
    return Subspace.from_vectors(module.dim, [b.apply(vector) for b in basis]).dim


def check_hecke_relations(actions: dict[str, QMat], r: int) -> list[str]:
    """Violated 0-Hecke relations (quadratic, braid, commutation); [] if none."""
    bad = []
    mats = {i: actions[f"pi{i}"] for i in range(1, r)}
    for i in range(1, r):
        if mats[i] * mats[i] != -mats[i]:
            bad.append(f"quadratic i={i}")
    for i in range(1, r - 1):
        if mats[i] * mats[i + 1] * mats[i] != mats[i + 1] * mats[i] * mats[i + 1]:
            bad.append(f"braid i={i}")
    for i in range(1, r):
        for j in range(i + 2, r):
            if mats[i] * mats[j] != mats[j] * mats[i]:
                bad.append(f"commutation i={i} j={j}")
    return bad


def check_uq0_relations(actions: dict[str, QMat], n: int) -> list[str]:
    """Violated defining relations of the degenerate quantum group; [] if none."""
    e = {i: actions[f"e{i}"] for i in range(1, n)}
    f = {i: actions[f"f{i}"] for i in range(1, n)}
    k = {i: actions[f"k{i}"] for i in range(1, n + 1)}
    bad = []

    def chk(ok: bool, name: str):
        if not ok:
            bad.append(name)

    for i in range(1, n + 1):
        for j in range(1, n + 1):
            chk(k[i] * k[j] == k[j] * k[i], f"kk i={i} j={j}")
    for i in range(2, n):
        chk((e[i - 1] * k[i]).is_zero(), f"e(i-1)k(i)=0 i={i}")
        chk((k[i] * f[i - 1]).is_zero(), f"k(i)f(i-1)=0 i={i}")
    for i in range(1, n):
        chk((k[i] * e[i]).is_zero(), f"k(i)e(i)=0 i={i}")
        chk((f[i] * k[i]).is_zero(), f"f(i)k(i)=0 i={i}")
    for i in range(1, n + 1):
        for j in range(1, n):
            if j not in (i - 1, i):
                chk(k[i] * e[j] == e[j] * k[i], f"ke commute i={i} j={j}")
                chk(k[i] * f[j] == f[j] * k[i], f"kf commute i={i} j={j}")
    for i in range(1, n):
        for j in range(1, n):
            lhs = e[i] * f[j] - f[j] * e[i]
            rhs = (k[i + 1] - k[i]) if i == j else QMat.zeros(lhs.nrows, lhs.ncols)
            chk(lhs == rhs, f"ef commutator i={i} j={j}")
    # adjacent-pair relations: the lower-index generator squares on the
    # outside of e-words and on the inside of f-words; the other two
    # printed orientations fail on the defining tensor representation
    zero = QMat.zeros(e[1].nrows, e[1].ncols) if n > 1 else QMat([])
    for i in range(1, n - 1):
        chk(e[i] * e[i] * e[i + 1] - e[i] * e[i + 1] * e[i] == zero, f"serre e a i={i}")
        chk(e[i] * e[i + 1] * e[i + 1] - e[i + 1] * e[i] * e[i + 1] == zero, f"serre e b i={i}")
        chk(f[i + 1] * f[i] * f[i] - f[i] * f[i + 1] * f[i] == zero, f"serre f a i={i}")
        chk(f[i + 1] * f[i + 1] * f[i] - f[i + 1] * f[i] * f[i + 1] == zero, f"serre f b i={i}")
    for i in range(1, n):
        for j in range(1, n):
            if abs(i - j) > 1:
                chk(e[i] * e[j] == e[j] * e[i], f"ee commute i={i} j={j}")
                chk(f[i] * f[j] == f[j] * f[i], f"ff commute i={i} j={j}")
    for i in range(1, n - 1):
        chk(e[i] * e[i + 1] * k[i] == k[i + 1] * e[i] * e[i + 1], f"mixed e i={i}")
        chk(f[i + 1] * f[i] * k[i + 1] == k[i] * f[i + 1] * f[i], f"mixed f i={i}")
    return bad
