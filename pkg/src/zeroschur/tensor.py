"""The tensor space as a bimodule: right 0-Hecke action and the
endomorphism realization of the 0-Schur standard basis.

Basis words are tuples over 1..n of length r, in lexicographic order.  The
0-Hecke generator acts on the right by sorting: it swaps an increasing
adjacent pair, kills an equal pair, and negates a decreasing pair.  Every
standard basis element e_A acts on the left through a double-coset sum: with
lam = ro(A) and mu = co(A), e_A kills all weight spaces except mu and sends
the sorted word of weight mu to the sum over distinguished coset
representatives, transported along the canonical identification of
weight spaces with cyclic right modules.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product as iter_product

from .compositions import Composition, weak_compositions
from .exactlin import GuardError, QMat
from .hecke import (
    Perm,
    all_perms,
    descents,
    identity_perm,
    left_mult_s,
    perm_inverse,
    perm_length,
    perm_mult,
    reduced_word,
    right_mult_s,
    young_subgroup_inner_indices,
)
from .matrices import NNMatrix, co, diag, ro

Word = tuple[int, ...]

TENSOR_DIM_GUARD = 4096


def content(word: Word, n: int) -> Composition:
    """cont(word): how many of each letter 1..n."""
    out = [0] * n
    for x in word:
        out[x - 1] += 1
    return tuple(out)


def phi0_word(lam: Composition) -> Word:
    """The sorted word with lam_k copies of k."""
    out: list[int] = []
    for k, mult in enumerate(lam, start=1):
        out.extend([k] * mult)
    return tuple(out)


def right_act(word: Word, i: int) -> tuple[int, Word] | None:
    """word . pibar_i: (sign, word) or None for zero."""
    a, b = word[i - 1], word[i]
    if a < b:
        swapped = list(word)
        swapped[i - 1], swapped[i] = b, a
        return (1, tuple(swapped))
    if a == b:
        return None
    return (-1, word)


class TensorSpace:
    """The word basis of the r-fold tensor power of an n-dimensional space,
    with its weight decomposition and sorting permutations.

    For each weight lam the basis word of content lam is reached from the
    sorted word by a unique minimal permutation acting on the right through
    increasing swaps only; breadth-first search records it with sign +1.
    """

    def __init__(self, n: int, r: int):
        if n < 1:
            raise ValueError("n must be positive")
        if n ** r > TENSOR_DIM_GUARD:
            raise GuardError(f"tensor dimension {n}**{r} exceeds {TENSOR_DIM_GUARD}")
        self.n = n
        self.r = r
        self.words: list[Word] = [tuple(w) for w in iter_product(range(1, n + 1), repeat=r)]
        self.index = {w: k for k, w in enumerate(self.words)}
        self.contents = {w: content(w, n) for w in self.words}
        self.sorting_perm: dict[Word, Perm] = {}
        for lam in weak_compositions(n, r):
            start = phi0_word(lam)
            frontier = {start: identity_perm(r)}
            self.sorting_perm[start] = identity_perm(r)
            while frontier:
                nxt: dict[Word, Perm] = {}
                for w, perm in frontier.items():
                    for i in range(1, r):
                        if w[i - 1] < w[i]:
                            res = right_act(w, i)
                            assert res is not None and res[0] == 1
                            w2 = res[1]
                            if w2 not in self.sorting_perm:
                                p2 = right_mult_s(perm, i)
                                self.sorting_perm[w2] = p2
                                nxt[w2] = p2
                frontier = nxt
        assert len(self.sorting_perm) == len(self.words)

    @property
    def dim(self) -> int:
        return len(self.words)

    def weight_words(self, lam: Composition) -> list[Word]:
        return [w for w in self.words if self.contents[w] == lam]

    def right_action_matrix(self, i: int) -> QMat:
        cols = []
        for w in self.words:
            col = [0] * self.dim
            res = right_act(w, i)
            if res is not None:
                sign, w2 = res
                col[self.index[w2]] += sign
            cols.append(col)
        return QMat(list(zip(*cols)))

    def apply_word_perm(self, vector: dict[Word, int], w: Perm) -> dict[Word, int]:
        """Apply pibar_w on the right of a vector in word coordinates."""
        out = dict(vector)
        for i in reduced_word(w):
            nxt: dict[Word, int] = {}
            for word, c in out.items():
                res = right_act(word, i)
                if res is None:
                    continue
                sign, w2 = res
                nxt[w2] = nxt.get(w2, 0) + sign * c
            out = nxt
        return out


# --- double cosets ----------------------------------------------------------


def _r_blocks(lam: Composition) -> list[range]:
    """The consecutive position blocks R_i of a weak composition."""
    out, acc = [], 0
    for p in lam:
        out.append(range(acc + 1, acc + p + 1))
        acc += p
    return out


@dataclass(frozen=True)
class DoubleCosetDatum:
    """w_A, its double coset, the minimal element, and the distinguished
    left-coset representatives used by the endomorphism construction."""

    matrix: NNMatrix
    lam: Composition  # ro(A)
    mu: Composition   # co(A)
    w_A: Perm
    d_A: Perm
    coset_elements: tuple[Perm, ...]
    min_reps: tuple[Perm, ...]


def choose_w_A(a: NNMatrix) -> Perm:
    """Row-reading filling: scanning entries row by row, the next a_{i,j}
    unused positions of the j-th column block map onto the next slots of the
    i-th row block, so that a_{i,j} = |R_i ∩ w_A(R_j)|."""
    lam, mu = ro(a), co(a)
    r = sum(lam)
    row_blocks = _r_blocks(lam)
    col_blocks = [list(b) for b in _r_blocks(mu)]
    used = [0] * len(col_blocks)
    w = [0] * r
    for i, block in enumerate(row_blocks):
        slots = list(block)
        s = 0
        for j in range(len(col_blocks)):
            take = a[i][j]
            for _ in range(take):
                src = col_blocks[j][used[j]]
                used[j] += 1
                w[src - 1] = slots[s]
                s += 1
    return tuple(w)


def double_coset_datum(a: NNMatrix) -> DoubleCosetDatum:
    """The double coset S_lam w_A S_mu with its minimal element and the
    minimal representatives of the left S_lam-cosets inside it."""
    lam, mu = ro(a), co(a)
    w_a = choose_w_A(a)
    lam_gens = young_subgroup_inner_indices(lam)
    mu_gens = young_subgroup_inner_indices(mu)
    seen = {w_a}
    queue = [w_a]
    while queue:
        w = queue.pop()
        for i in lam_gens:
            nxt = left_mult_s(w, i)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
        for i in mu_gens:
            nxt = right_mult_s(w, i)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    coset = tuple(sorted(seen))
    d_a = min(coset, key=lambda w: (perm_length(w), w))
    min_reps = tuple(sorted(
        w for w in coset
        if all(i not in descents(perm_inverse(w)) for i in lam_gens)))
    # consistency with the defining block-intersection property
    row_blocks = [set(b) for b in _r_blocks(lam)]
    col_blocks = [set(b) for b in _r_blocks(mu)]
    for i, rb in enumerate(row_blocks):
        for j, cb in enumerate(col_blocks):
            assert a[i][j] == len(rb & {w_a[x - 1] for x in cb})
    return DoubleCosetDatum(a, lam, mu, w_a, d_a, coset, min_reps)


def e_A_endomorphism(a: NNMatrix, space: TensorSpace) -> QMat:
    """The matrix of the standard basis element e_A on the word basis.

    e_A kills every weight space except co(A); the sorted word of weight
    co(A) is sent to the double-coset sum, which factors through the Young
    sum of ro(A) as the sum over distinguished left-coset representatives,
    and the action extends to the weight space by right 0-Hecke linearity.
    """
    lam, mu = ro(a), co(a)
    datum = double_coset_datum(a)
    base: dict[Word, int] = {}
    start = phi0_word(lam)
    for v in datum.min_reps:
        img = space.apply_word_perm({start: 1}, v)
        for w, c in img.items():
            base[w] = base.get(w, 0) + c
    d = space.dim
    cols: dict[int, dict[Word, int]] = {}
    for word in space.weight_words(mu):
        vec = space.apply_word_perm(base, space.sorting_perm[word])
        cols[space.index[word]] = vec
    rows = []
    for i in range(d):
        rows.append([cols.get(j, {}).get(space.words[i], 0) for j in range(d)])
    return QMat(rows)


def k_lambda_matrix(lam: Composition, space: TensorSpace) -> QMat:
    """Projection onto the words of content lam (= e_A for A diagonal)."""
    return QMat([[1 if (i == j and space.contents[space.words[i]] == lam) else 0
                  for j in range(space.dim)] for i in range(space.dim)])


def e_i_matrix(i: int, space: TensorSpace) -> QMat:
    """psi-image of the i-th raising generator: the sum over weights of the
    endomorphisms of D_lam - E_{i+1,i+1} + E_{i,i+1}."""
    out = QMat.zeros(space.dim, space.dim)
    for lam in weak_compositions(space.n, space.r):
        if lam[i] == 0:
            continue
        a = [list(row) for row in diag(lam)]
        a[i][i] -= 1
        a[i - 1][i] += 1
        out = out + e_A_endomorphism(tuple(tuple(row) for row in a), space)
    return out


def f_i_matrix(i: int, space: TensorSpace) -> QMat:
    """psi-image of the i-th lowering generator."""
    out = QMat.zeros(space.dim, space.dim)
    for lam in weak_compositions(space.n, space.r):
        if lam[i - 1] == 0:
            continue
        a = [list(row) for row in diag(lam)]
        a[i - 1][i - 1] -= 1
        a[i][i - 1] += 1
        out = out + e_A_endomorphism(tuple(tuple(row) for row in a), space)
    return out


def psi_image(kind: str, index: int, space: TensorSpace) -> QMat:
    """The 0-Schur realization of a degenerate quantum group generator.

    kind 'e'/'f' with 1 <= index <= n-1 give e_i and f_i; kind 'k' with
    1 <= index <= n gives the sum of weight projections with index-th part
    zero.
    """
    if kind == "e":
        return e_i_matrix(index, space)
    if kind == "f":
        return f_i_matrix(index, space)
    if kind == "k":
        out = QMat.zeros(space.dim, space.dim)
        for lam in weak_compositions(space.n, space.r):
            if lam[index - 1] == 0:
                out = out + k_lambda_matrix(lam, space)
        return out
    raise ValueError(f"unknown generator kind {kind}")


# --- descendants ------------------------------------------------------------


def descendants_E(i: int, word: Word) -> set[Word]:
    """Words obtained by turning one letter i+1 into i, at a position with
    no later letter equal to i."""
    out = set()
    r = len(word)
    for k in range(r):
        if word[k] == i + 1 and all(word[m] != i for m in range(k + 1, r)):
            out.add(word[:k] + (i,) + word[k + 1:])
    return out


def descendants_F(i: int, word: Word) -> set[Word]:
    """Words obtained by turning one letter i into i+1, at a position with
    no earlier letter equal to i+1."""
    out = set()
    for k in range(len(word)):
        if word[k] == i and all(word[m] != i + 1 for m in range(k)):
            out.add(word[:k] + (i + 1,) + word[k + 1:])
    return out


# --- presentation -----------------------------------------------------------


def schur_generator_matrices(space: TensorSpace) -> dict[str, QMat]:
    """All e_i, f_i realized on the tensor space (k's come from weights)."""
    out = {}
    for i in range(1, space.n):
        out[f"e{i}"] = e_i_matrix(i, space)
        out[f"f{i}"] = f_i_matrix(i, space)
    return out


def verify_presentation(n: int, r: int) -> dict:
    """Evaluate every defining relation of the 0-Schur presentation on the
    endomorphism realization, weight by weight.

    The three families sandwich a degree-homogeneous element between
    projections; the report lists each (family, i, j, lam) violation and the
    three global operator identities.
    """
    space = TensorSpace(n, r)
    gens = schur_generator_matrices(space)
    lams = weak_compositions(n, r)
    proj = {lam: k_lambda_matrix(lam, space) for lam in lams}
    zero = QMat.zeros(space.dim, space.dim)

    def proj_of(vec):
        return proj.get(tuple(vec), zero)

    def a_vec(i):
        out = [0] * n
        out[i - 1] += 1
        out[i] -= 1
        return out

    checks = []

    def record(name, ok):
        checks.append({"name": name, "pass": bool(ok)})

    e = {i: gens[f"e{i}"] for i in range(1, n)}
    f = {i: gens[f"f{i}"] for i in range(1, n)}
    for i in range(1, n):
        for j in range(1, n):
            if i == j - 1:
                p_op = e[i] * e[i] * e[j] - e[i] * e[j] * e[i]
                n_op = f[j] * f[i] * f[i] - f[i] * f[j] * f[i]
            elif i == j + 1:
                p_op = e[j] * e[i] * e[i] - e[i] * e[j] * e[i]
                n_op = f[i] * f[i] * f[j] - f[i] * f[j] * f[i]
            else:
                p_op = e[i] * e[j] - e[j] * e[i]
                n_op = f[i] * f[j] - f[j] * f[i]
            if i == j - 1 or i == j + 1:
                p_shift = [2 * x + y for x, y in zip(a_vec(i), a_vec(j))]
            else:
                p_shift = [x + y for x, y in zip(a_vec(i), a_vec(j))]
            c_op = e[i] * f[j] - f[j] * e[i]
            if i == j:
                k_plus = QMat.zeros(space.dim, space.dim)
                k_minus = QMat.zeros(space.dim, space.dim)
                for lam in lams:
                    if lam[i] == 0:
                        k_plus = k_plus + proj[lam]
                    if lam[i - 1] == 0:
                        k_minus = k_minus + proj[lam]
                c_op = c_op - (k_plus - k_minus)
            c_shift = [x - y for x, y in zip(a_vec(i), a_vec(j))]
            ok_p = ok_n = ok_c = True
            for lam in lams:
                lp = [x + s for x, s in zip(lam, p_shift)]
                ln = [x - s for x, s in zip(lam, p_shift)]
                lc = [x + s for x, s in zip(lam, c_shift)]
                if not (proj_of(lp) * p_op * proj[lam]).is_zero():
                    ok_p = False
                if not (proj_of(ln) * n_op * proj[lam]).is_zero():
                    ok_n = False
                if not (proj_of(lc) * c_op * proj[lam]).is_zero():
                    ok_c = False
            record(f"P[{i},{j}]", ok_p and p_op.is_zero())
            record(f"N[{i},{j}]", ok_n and n_op.is_zero())
            record(f"C[{i},{j}]", ok_c and c_op.is_zero())
    record("sum of weight projections is identity",
           sum((proj[lam] for lam in lams), zero) == QMat.identity(space.dim))
    return {"suite": "presentation", "n": n, "r": r,
            "pass": all(c["pass"] for c in checks), "checks": checks}
