"""Composition combinatorics.

Compositions are plain tuples of nonnegative ints; the empty composition is
``()``.  Weak compositions of r with n parts form Lambda(n, r); strong
compositions (all parts positive) of r form Lambda+(r) and biject with
subsets of {1, ..., r-1} through partial sums; Lambda_bullet(n, r) is the set
of weak compositions whose zero parts all trail.

>>> weak_compositions(2, 2)
[(0, 2), (1, 1), (2, 0)]
>>> plus((3, 1, 2, 0, 0, 0))
(3, 1, 2)
>>> sorted(maximal_set((3, 0, 2, 0, 1)))
[(1, 1, 1, 1, 1), (1, 1, 3), (3, 1, 1), (5,)]
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

Composition = tuple[int, ...]


def weak_compositions(n: int, r: int) -> list[Composition]:
    """All weak compositions of r with exactly n parts, in lex order."""
    if n < 0 or r < 0:
        raise ValueError("n and r must be nonnegative")
    if n == 0:
        return [()] if r == 0 else []
    out: list[Composition] = []

    def rec(prefix: list[int], remaining: int, parts_left: int):
        if parts_left == 1:
            out.append(tuple(prefix + [remaining]))
            return
        for v in range(remaining + 1):
            rec(prefix + [v], remaining - v, parts_left - 1)

    rec([], r, n)
    assert len(out) == comb(n + r - 1, r)
    return out


def strong_compositions(r: int) -> list[Composition]:
    """All strong compositions of r (any length), in lex order."""
    if r == 0:
        return [()]
    return sorted(composition_from_descents(DescentSet(r, frozenset(s)))
                  for k in range(r)
                  for s in combinations(range(1, r), k))


def strong_compositions_of_length(length: int, r: int) -> list[Composition]:
    """Lambda+(length, r), in lex order."""
    return [a for a in strong_compositions(r) if len(a) == length]


def is_strong(alpha: Composition) -> bool:
    return all(p > 0 for p in alpha)


def zeros_trail(lam: Composition) -> bool:
    """Whether every zero part of lam is followed only by zeros."""
    seen_zero = False
    for p in lam:
        if p == 0:
            seen_zero = True
        elif seen_zero:
            return False
    return True


def lambda_bullet_set(n: int, r: int) -> list[Composition]:
    """Weak compositions of r of length n with all zero parts trailing, lex order."""
    return [lam for lam in weak_compositions(n, r) if zeros_trail(lam)]


def plus(lam: Composition) -> Composition:
    """Remove the trailing zero parts (lambda -> lambda^+).

    Raises on an internal zero followed by a nonzero part, i.e. when ``lam``
    is not in any Lambda_bullet(n, r).
    """
    seen_zero = False
    for p in lam:
        if p == 0:
            seen_zero = True
        elif seen_zero:
            raise ValueError(f"{lam} has an internal zero followed by a nonzero part")
    return tuple(p for p in lam if p > 0)


def bullet(alpha: Composition, n: int) -> Composition:
    """Append zeros to a strong composition to reach length n (alpha -> alpha_bullet).

    By convention the result is the empty composition when len(alpha) > n.
    """
    if not is_strong(alpha):
        raise ValueError(f"{alpha} is not strong")
    if len(alpha) > n:
        return ()
    return alpha + (0,) * (n - len(alpha))


@dataclass(frozen=True)
class DescentSet:
    """A subset of {1, ..., r-1}, tagged with the composed integer r."""

    r: int
    elements: frozenset[int]

    def __post_init__(self):
        if not all(1 <= i <= self.r - 1 for i in self.elements):
            raise ValueError(f"descents must lie in 1..{self.r - 1}")


def descent_set(alpha: Composition) -> DescentSet:
    """Partial sums of a strong composition, as a subset of [r-1]."""
    if not is_strong(alpha):
        raise ValueError(f"{alpha} is not strong")
    r = sum(alpha)
    sums, acc = [], 0
    for p in alpha[:-1]:
        acc += p
        sums.append(acc)
    return DescentSet(r, frozenset(sums))


def composition_from_descents(ds: DescentSet) -> Composition:
    """Inverse of descent_set: comp(I) for I a subset of [r-1]."""
    cuts = sorted(ds.elements)
    prev, parts = 0, []
    for c in cuts:
        parts.append(c - prev)
        prev = c
    parts.append(ds.r - prev)
    return tuple(parts) if ds.r > 0 else ()


def reverse(alpha: Composition) -> Composition:
    """alpha^r, the reversed composition."""
    return tuple(reversed(alpha))


def complement(alpha: Composition) -> Composition:
    """alpha^c, the strong composition with complementary descent set."""
    ds = descent_set(alpha)
    return composition_from_descents(
        DescentSet(ds.r, frozenset(range(1, ds.r)) - ds.elements))


def conjugate(alpha: Composition) -> Composition:
    """alpha^t = (alpha^r)^c = (alpha^c)^r; both routes are computed and compared."""
    a = complement(reverse(alpha))
    b = reverse(complement(alpha))
    assert a == b
    return a


def refinement_indices(mu: Composition, lam: Composition) -> tuple[int, ...] | None:
    """The unique index sequence witnessing mu refining lam, or None.

    For lam in Lambda_bullet(n, r) with t positive parts, the witness is the
    sequence 1 = i_1 < ... < i_{t+1} = n+1 with
    lam_k = mu_{i_k} + ... + mu_{i_{k+1}-1} and mu_{i_k} > 0 for 2 <= k <= t.
    Uniqueness is asserted rather than assumed.
    """
    n = len(lam)
    if len(mu) != n or sum(mu) != sum(lam):
        return None
    t = len(plus(lam))
    found = []

    def rec(k: int, start: int, seq: list[int]):
        # seq holds i_1..i_k; block k covers positions start..i_{k+1}-1
        if k == t:
            if sum(mu[start - 1:n]) == (lam[t - 1] if t else 0):
                found.append(tuple(seq + [n + 1]))
            return
        acc = 0
        for nxt in range(start + 1, n - (t - k) + 2):
            acc += mu[nxt - 2]
            if acc == lam[k - 1] and mu[nxt - 1] > 0:
                rec(k + 1, nxt, seq + [nxt])

    if t == 0:
        return (1,) if all(p == 0 for p in mu) else None
    rec(1, 1, [1])
    assert len(found) <= 1, f"refinement witness not unique for {mu} in {lam}"
    return found[0] if found else None


def refines(mu: Composition, lam: Composition) -> bool:
    """Whether mu is obtained by subdividing the parts of lam in order."""
    return refinement_indices(mu, lam) is not None


def refinements(lam: Composition) -> list[Composition]:
    """Lambda(n, r)_{<= lam}: all weak compositions of length len(lam) refining lam."""
    n, r = len(lam), sum(lam)
    return [mu for mu in weak_compositions(n, r) if refines(mu, lam)]


def maximal_set(lam: Composition) -> list[Composition]:
    """The strong compositions of n = len(lam) maximal with respect to lam.

    alpha cuts lam into consecutive blocks; alpha is maximal when every block
    either equals (0) or has nonzero first and last entries.  For lam in
    Lambda_bullet this agrees with the concatenation rule
    {beta . 1^(n - l(lam+)) : beta strong of l(lam+)}, which fails for
    general weak lam, so the block condition is the implementation.
    """
    n = len(lam)
    out = []
    for alpha in strong_compositions(n):
        pos, ok = 0, True
        for a in alpha:
            block = lam[pos:pos + a]
            pos += a
            if block != (0,) and (block[0] == 0 or block[-1] == 0):
                ok = False
                break
        if ok:
            out.append(alpha)
    return out


def parse_composition(text: str) -> Composition:
    """Parse the CLI spelling: dot-separated parts, 'empty' for ()."""
    if text == "empty":
        return ()
    try:
        parts = tuple(int(p) for p in text.split("."))
    except ValueError as exc:
        raise ValueError(f"cannot parse composition {text!r}") from exc
    if any(p < 0 for p in parts):
        raise ValueError(f"negative part in {text!r}")
    return parts


def format_composition(comp: Composition) -> str:
    return "empty" if comp == () else ".".join(str(p) for p in comp)
