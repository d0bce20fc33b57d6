"""Modules over the 0-Schur algebra built from matrix combinatorics.

The generator action on standard basis elements moves one unit between
adjacent rows of the indexing matrix: e_i pulls a unit from row i+1 up into
row i inside the rightmost positive column of row i+1, f_i pushes a unit
from row i down into row i+1 inside the leftmost positive column of row i.
The projective indecomposable P_lambda truncates this action to the basis
B^lambda, the simple S_lambda further truncates to the column block diagonal
matrices, and N_lambda = rad(P_lambda) is spanned by the complement.

The column index for the moved unit ranges over 1..n (not 1..n-1): the
stated 1..n-1 bound would leave e_i undefined on matrices whose row i+1 is
supported in the last column, and the published action graphs force the
wider range.
"""

from __future__ import annotations

from .algmod import (
    SCHUR,
    AlgModule,
    find_isomorphism,
    radical_subspace,
    socle_subspace,
    submodule,
)
from .compositions import Composition, refines, zeros_trail
from .exactlin import QMat, Subspace
from .matrices import NNMatrix, basis_B_lambda, cb_set, diag, ro

__all__ = [
    "e_on_basis", "f_on_basis", "build_P", "build_S", "build_N",
    "lowering_length", "lowering_word", "radical_of_module", "socle_of_module",
    "identify_simple", "action_graph",
]


def e_on_basis(i: int, a: NNMatrix) -> NNMatrix | None:
    """e_i . e_A in the 0-Schur algebra, or None for the zero product."""
    n = len(a)
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")
    if ro(a)[i] == 0:  # row i+1 empty
        return None
    p = max(j for j in range(1, n + 1) if a[i][j - 1] > 0)
    rows = [list(row) for row in a]
    rows[i - 1][p - 1] += 1
    rows[i][p - 1] -= 1
    return tuple(tuple(row) for row in rows)


def f_on_basis(i: int, a: NNMatrix) -> NNMatrix | None:
    """f_i . e_A in the 0-Schur algebra, or None for the zero product."""
    n = len(a)
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")
    if ro(a)[i - 1] == 0:  # row i empty
        return None
    q = min(j for j in range(1, n + 1) if a[i - 1][j - 1] > 0)
    rows = [list(row) for row in a]
    rows[i - 1][q - 1] -= 1
    rows[i][q - 1] += 1
    return tuple(tuple(row) for row in rows)


def _truncated_module(lam: Composition, labels: list[NNMatrix]) -> AlgModule:
    """Module on the given matrices where a generator acts by its 0-Schur
    product when the result stays in the label set and by zero otherwise."""
    n = len(lam)
    index = {a: k for k, a in enumerate(labels)}
    d = len(labels)
    actions = {}
    for name, op in [("e", e_on_basis), ("f", f_on_basis)]:
        for i in range(1, n):
            cols = []
            for a in labels:
                col = [0] * d
                b = op(i, a)
                if b is not None and b in index:
                    col[index[b]] = 1
                cols.append(col)
            actions[f"{name}{i}"] = QMat(list(zip(*cols))) if cols else QMat([])
    weights = {a: ro(a) for a in labels}
    return AlgModule(SCHUR, (n, sum(lam)), tuple(labels), actions, weights=weights)


def build_P(lam: Composition) -> AlgModule:
    """The projective indecomposable P_lambda on the basis B^lambda."""
    if not zeros_trail(lam):
        raise ValueError(f"{lam} is not in Lambda_bullet")
    return _truncated_module(lam, basis_B_lambda(lam))


def build_S(lam: Composition) -> AlgModule:
    """The simple module S_lambda on the column block diagonal basis."""
    if not zeros_trail(lam):
        raise ValueError(f"{lam} is not in Lambda_bullet")
    return _truncated_module(lam, cb_set(lam))


def build_N(lam: Composition) -> AlgModule:
    """N_lambda = rad(P_lambda), spanned by B^lambda minus the column block
    diagonal matrices, with the restricted action."""
    if not zeros_trail(lam):
        raise ValueError(f"{lam} is not in Lambda_bullet")
    cb = set(cb_set(lam))
    labels = [a for a in basis_B_lambda(lam) if a not in cb]
    module = _truncated_module(lam, labels)
    # restriction must be closed: no edge may leave the complement
    full = set(basis_B_lambda(lam))
    for a in labels:
        for i in range(1, len(lam)):
            for op in (e_on_basis, f_on_basis):
                b = op(i, a)
                assert not (b in full and b in cb), "N_lambda is not a submodule"
    return module


def lowering_word(lam: Composition, a: NNMatrix) -> list[int]:
    """Indices [i_1, ..., i_l] with e_A = f_{i_l} ... f_{i_1} k_lambda in
    S_lambda, found by breadth-first search along the f-action from the
    diagonal matrix."""
    labels = cb_set(lam)
    if a not in set(labels):
        raise ValueError("matrix is not column block diagonal with the right sums")
    n = len(lam)
    start = diag(lam)
    in_cb = set(labels)
    frontier = {start: []}
    seen = {start}
    while frontier:
        if a in frontier:
            return frontier[a]
        nxt = {}
        for m, word in frontier.items():
            for i in range(1, n):
                b = f_on_basis(i, m)
                if b is not None and b in in_cb and b not in seen:
                    seen.add(b)
                    nxt[b] = word + [i]
        frontier = nxt
    raise AssertionError("every cb matrix is reachable from the diagonal")


def lowering_length(lam: Composition, a: NNMatrix) -> int:
    """The unique length l of any f-word producing e_A from k_lambda.

    Recoverable without search: each f_i shifts the row-sum vector by one
    unit from row i to row i+1, so the number of f_i letters is the i-th
    partial sum of lambda - ro(A)."""
    if a not in set(cb_set(lam)):
        raise ValueError("matrix is not column block diagonal with the right sums")
    mu = ro(a)
    n = len(lam)
    counts = []
    for i in range(1, n):
        counts.append(sum(lam[k] - mu[k] for k in range(i)))
    assert all(c >= 0 for c in counts)
    return sum(counts)


def lowering_multiset(lam: Composition, a: NNMatrix) -> dict[int, int]:
    """Multiplicity of each f_i in any lowering word for e_A."""
    mu = ro(a)
    return {i: sum(lam[k] - mu[k] for k in range(i)) for i in range(1, len(lam))}


def radical_of_module(module: AlgModule) -> Subspace:
    """rad(M), via the trace-form radical of the represented algebra."""
    return radical_subspace(module)


def socle_of_module(module: AlgModule) -> Subspace:
    """soc(M), the annihilator of the represented radical."""
    return socle_subspace(module)


def identify_simple(module: AlgModule, seed: int = 0) -> Composition:
    """The lambda with module isomorphic to S_lambda.

    The weight support of S_lambda is the refinement interval below lambda,
    so the representative is the unique weight that every other weight
    refines; the identification is then certified by an explicit invertible
    intertwiner.
    """
    if module.tag != SCHUR or module.dim == 0:
        raise ValueError("expected a nonzero 0-Schur module")
    support = sorted({module.weights[lab] for lab in module.labels})
    candidates = [nu for nu in support if zeros_trail(nu)]
    tops = [nu for nu in candidates if all(refines(mu, nu) for mu in support)]
    if len(tops) != 1:
        raise ValueError("weight support has no unique maximal element")
    lam = tops[0]
    candidate = build_S(lam)
    if find_isomorphism(module, candidate, seed=seed) is None:
        raise ValueError(f"module is not isomorphic to the simple indexed by {lam}")
    return lam


def socle_module(module: AlgModule) -> AlgModule:
    """The socle as a module (restriction to the socle subspace)."""
    return submodule(module, socle_subspace(module), label_prefix="soc")


def action_graph(module: AlgModule) -> tuple[tuple, list[tuple]]:
    """Nodes and labeled edges (source, target, generator) of a module whose
    generator actions are monomial with entries in {0, 1}."""
    edges = []
    for name in module.generator_names():
        mat = module.actions[name]
        for col in range(module.dim):
            hits = [row for row in range(module.dim) if mat.rows[row][col]]
            if not hits:
                continue
            if len(hits) != 1 or mat.rows[hits[0]][col] != 1:
                raise ValueError(f"action {name} is not a 0/1 monomial matrix")
            edges.append((module.labels[col], module.labels[hits[0]], name))
    return module.labels, edges
