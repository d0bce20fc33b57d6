"""Combinatorics of nonnegative integer matrices indexing the standard basis.

An NNMatrix is an n x n tuple-of-tuples of nonnegative ints with total entry
sum r; these matrices index the standard basis of the 0-Schur algebra.  This
module provides their enumeration, row/column sums, the openness predicates,
the basis sets B^lambda (columns) and B_mu (rows), column block diagonal
matrices, and the row-sum bijection onto refinements.

>>> ro(((1, 0, 0), (1, 0, 0), (0, 1, 0)))
(1, 1, 1)
>>> is_open(((0, 1), (1, 0)))
True
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import comb

from .compositions import (
    Composition,
    maximal_set,
    plus,
    refinement_indices,
    weak_compositions,
    zeros_trail,
)

NNMatrix = tuple[tuple[int, ...], ...]


def diag(lam: Composition) -> NNMatrix:
    n = len(lam)
    return tuple(tuple(lam[i] if i == j else 0 for j in range(n)) for i in range(n))


def matrix_sum(a: NNMatrix) -> int:
    return sum(sum(row) for row in a)


def ro(a: NNMatrix) -> Composition:
    """Row-sum vector."""
    return tuple(sum(row) for row in a)


def co(a: NNMatrix) -> Composition:
    """Column-sum vector."""
    return tuple(sum(col) for col in zip(*a)) if a else ()


def enumerate_nn_matrices(n: int, r: int) -> list[NNMatrix]:
    """All of M_n(r), ordered lexicographically on the row-major entry vector."""
    if n < 1:
        raise ValueError("n must be positive")
    out = [tuple(tuple(v[i * n:(i + 1) * n]) for i in range(n))
           for v in weak_compositions(n * n, r)]
    assert len(out) == comb(n * n + r - 1, r)
    return out


def matrices_with_column_sums(lam: Composition) -> list[NNMatrix]:
    """All n x n matrices with co(A) = lam, row-major lex order."""
    n = len(lam)
    cols_choices = [weak_compositions(n, c) for c in lam]
    out = [tuple(zip(*cols)) for cols in product(*cols_choices)]
    return sorted(out)


def matrices_with_row_sums(mu: Composition) -> list[NNMatrix]:
    """All n x n matrices with ro(A) = mu, row-major lex order."""
    n = len(mu)
    rows_choices = [weak_compositions(n, c) for c in mu]
    return sorted(tuple(rows) for rows in product(*rows_choices))


def is_open(a: NNMatrix) -> bool:
    """Every 2x2 submatrix has a zero on its diagonal.

    Equivalently: no pair of positive entries at (i, j), (i', j') with
    i < i' and j < j'.
    """
    n = len(a)
    leftmost_above = None  # min over earlier rows of leftmost positive column
    for i in range(n):
        row_positive = [j for j, v in enumerate(a[i]) if v > 0]
        if leftmost_above is not None and row_positive and row_positive[-1] > leftmost_above:
            return False
        if row_positive:
            lm = row_positive[0]
            leftmost_above = lm if leftmost_above is None else min(leftmost_above, lm)
    return True


def column_slice(a: NNMatrix, alpha: Composition, v: int) -> NNMatrix:
    """A(alpha; v): keep the v-th column window, zero the other columns."""
    n = len(a)
    start = sum(alpha[:v - 1])
    stop = start + alpha[v - 1]
    return tuple(tuple(a[i][j] if start <= j < stop else 0 for j in range(n))
                 for i in range(n))


def is_open_on_columns(a: NNMatrix, alpha: Composition) -> bool:
    """Whether every column slice A(alpha; v) is open."""
    n = len(a)
    if sum(alpha) != n:
        raise ValueError(f"{alpha} is not a composition of n={n}")
    return all(is_open(column_slice(a, alpha, v)) for v in range(1, len(alpha) + 1))


def transpose(a: NNMatrix) -> NNMatrix:
    return tuple(zip(*a)) if a else ()


def is_open_on_rows(a: NNMatrix, alpha: Composition) -> bool:
    """Row analogue: the row slices of A are open, i.e. A^T is open on columns."""
    return is_open_on_columns(transpose(a), alpha)


def _survives(a: NNMatrix, alphas: list[Composition], open_pred) -> bool:
    return not any(open_pred(a, alpha) for alpha in alphas)


def _removal_alphas(lam: Composition) -> list[Composition]:
    n = len(lam)
    ones = tuple([1] * n)
    return [alpha for alpha in maximal_set(lam) if alpha != ones]


def in_basis_B_lambda(a: NNMatrix, lam: Composition) -> bool:
    return co(a) == lam and _survives(a, _removal_alphas(lam), is_open_on_columns)


def basis_B_lambda(lam: Composition) -> list[NNMatrix]:
    """B^lambda: column sums lam, minus the matrices open on columns with
    respect to some maximal alpha other than (1, ..., 1)."""
    alphas = _removal_alphas(lam)
    return [a for a in matrices_with_column_sums(lam)
            if _survives(a, alphas, is_open_on_columns)]


def in_basis_B_mu_rows(a: NNMatrix, mu: Composition) -> bool:
    return ro(a) == mu and _survives(a, _removal_alphas(mu), is_open_on_rows)


def basis_B_mu_rows(mu: Composition) -> list[NNMatrix]:
    """B_mu: the row-side analogue of B^lambda."""
    alphas = _removal_alphas(mu)
    return [a for a in matrices_with_row_sums(mu)
            if _survives(a, alphas, is_open_on_rows)]


def is_column_block_diagonal(a: NNMatrix) -> bool:
    """a_{i,j} > 0 forces a_{r,s} = 0 for all r <= i, s > j."""
    n = len(a)
    for i in range(n):
        for j in range(n):
            if a[i][j] > 0:
                for r_ in range(i + 1):
                    for s in range(j + 1, n):
                        if a[r_][s] > 0:
                            return False
    return True


def cb_set(lam: Composition) -> list[NNMatrix]:
    """cb(lambda): column block diagonal matrices with co(A) = lam."""
    if not zeros_trail(lam):
        raise ValueError(f"{lam} is not in Lambda_bullet")
    return [a for a in matrices_with_column_sums(lam) if is_column_block_diagonal(a)]


@dataclass(frozen=True)
class ColumnBlocks:
    """The block-start indices m_1 < ... < m_{t+1} and column blocks of A."""

    block_starts: tuple[int, ...]
    blocks: tuple[tuple[int, ...], ...]


def column_blocks(a: NNMatrix) -> ColumnBlocks:
    """Block data of a column block diagonal matrix (1-based indices m_j).

    m_1 = 1, m_j = smallest row index with a positive entry in column j, and
    m_{t+1} = n + 1; block j is column j restricted to rows m_j .. m_{j+1}-1.
    """
    lam = co(a)
    if not zeros_trail(lam):
        raise ValueError("column sums must lie in Lambda_bullet")
    if not is_column_block_diagonal(a):
        raise ValueError("matrix is not column block diagonal")
    n = len(a)
    t = len(plus(lam))
    starts = [1]
    for j in range(2, t + 1):
        col = [a[i][j - 1] for i in range(n)]
        starts.append(next(i for i, v in enumerate(col, start=1) if v > 0))
    starts.append(n + 1)
    blocks = tuple(tuple(a[i - 1][j - 1] for i in range(starts[j - 1], starts[j]))
                   for j in range(1, t + 1))
    return ColumnBlocks(tuple(starts), blocks)


def row_bijection_inverse(mu: Composition, lam: Composition) -> NNMatrix:
    """The unique A in cb(lambda) with ro(A) = mu, for mu refining lam."""
    idx = refinement_indices(mu, lam)
    if idx is None:
        raise ValueError(f"{mu} does not refine {lam}")
    n = len(lam)
    t = len(idx) - 1
    rows = []
    for i in range(1, n + 1):
        row = [0] * n
        for j in range(1, t + 1):
            if idx[j - 1] <= i < idx[j]:
                row[j - 1] = mu[i - 1]
        rows.append(tuple(row))
    return tuple(rows)
