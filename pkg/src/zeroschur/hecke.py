"""The 0-Hecke algebra: permutations, the pibar basis, modules and twists.

Permutations are one-line tuples with values 1..r.  The algebra primitive is
pibar_i, defined by pibar_i^2 = -pibar_i and the braid relations; pi_i is
pibar_i + 1 and obar_w coincides with pibar_w.  Products of basis elements
are monomial (pibar_u pibar_v = +-pibar_w), which keeps all arithmetic here
combinatorial.

>>> multiply(pibar_elt(2, (2, 1)), pibar_elt(2, (2, 1))) == pibar_elt(2, (2, 1)).scale(-1)
True
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import permutations as iter_permutations

from .algmod import HECKE, AlgModule, check_hecke_relations
from .compositions import Composition, composition_from_descents, descent_set, DescentSet
from .exactlin import GuardError, QMat, SpanBuilder, rref

Perm = tuple[int, ...]

REGULAR_RANK_GUARD = 7


def identity_perm(r: int) -> Perm:
    return tuple(range(1, r + 1))


def all_perms(r: int) -> list[Perm]:
    """All of S_r in lexicographic order."""
    return [tuple(p) for p in iter_permutations(range(1, r + 1))]


def perm_length(w: Perm) -> int:
    """Coxeter length = inversion count."""
    return sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])


def descents(w: Perm) -> frozenset[int]:
    """Des(w) = {i : w(i) > w(i+1)}, positions 1-based."""
    return frozenset(i for i in range(1, len(w)) if w[i - 1] > w[i])


def perm_mult(u: Perm, v: Perm) -> Perm:
    """Composition (u v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(v)))


def perm_inverse(w: Perm) -> Perm:
    out = [0] * len(w)
    for i, val in enumerate(w, start=1):
        out[val - 1] = i
    return tuple(out)


def right_mult_s(w: Perm, i: int) -> Perm:
    """w s_i: swap positions i, i+1 (1-based)."""
    lst = list(w)
    lst[i - 1], lst[i] = lst[i], lst[i - 1]
    return tuple(lst)


def left_mult_s(w: Perm, i: int) -> Perm:
    """s_i w: swap values i, i+1."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def reduced_word(w: Perm) -> list[int]:
    """A reduced word for w, by descent scanning (bubble sort)."""
    word = []
    cur = w
    while True:
        des = descents(cur)
        if not des:
            break
        i = min(des)
        word.append(i)
        cur = right_mult_s(cur, i)
    word.reverse()
    return word


def longest_element(s: frozenset[int] | set[int], r: int) -> Perm:
    """w_0(S): the longest element of the parabolic subgroup generated by S."""
    w = identity_perm(r)
    changed = True
    while changed:
        changed = False
        for i in s:
            if i not in descents(w):
                w = right_mult_s(w, i)
                changed = True
    return w


def longest_coset_rep(t: frozenset[int] | set[int], r: int) -> Perm:
    """w_1(T): the longest permutation with descent set contained in T.

    Computed as w_0 w_0(T^c); validated against brute force in the tests.
    """
    w0 = longest_element(frozenset(range(1, r)), r)
    comp = frozenset(range(1, r)) - frozenset(t)
    return perm_mult(w0, longest_element(comp, r))


def weak_interval(s: frozenset[int] | set[int], t: frozenset[int] | set[int], r: int) -> list[Perm]:
    """{w : S <= Des(w) <= T}, which equals the left weak Bruhat interval
    [w_0(S), w_1(T)] -- both sets are computed and compared."""
    s, t = frozenset(s), frozenset(t)
    if not s <= t:
        raise ValueError("need S contained in T")
    by_descents = [w for w in all_perms(r) if s <= descents(w) <= t]
    bottom, top = longest_element(s, r), longest_coset_rep(t, r)
    lb, lt = perm_length(bottom), perm_length(top)
    interval = [w for w in all_perms(r)
                if perm_length(perm_mult(w, perm_inverse(bottom))) == perm_length(w) - lb
                and perm_length(perm_mult(top, perm_inverse(w))) == lt - perm_length(w)]
    assert set(by_descents) == set(interval), "weak interval mismatch"
    return by_descents


def young_subgroup_inner_indices(lam: Composition) -> frozenset[int]:
    """Generator indices of the Young subgroup S_lam: [r-1] minus the proper
    nonzero partial sums of lam."""
    r = sum(lam)
    sums, acc = set(), 0
    for p in lam:
        acc += p
        if 0 < acc < r:
            sums.add(acc)
    return frozenset(range(1, r)) - frozenset(sums)


def young_subgroup(lam: Composition) -> list[Perm]:
    """All elements of S_lam = S_{lam_1} x S_{lam_2} x ..., as elements of S_r."""
    r = sum(lam)
    gens = young_subgroup_inner_indices(lam)
    seen = {identity_perm(r)}
    queue = [identity_perm(r)]
    while queue:
        w = queue.pop()
        for i in gens:
            nxt = right_mult_s(w, i)
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return sorted(seen)


class HeckeElt:
    """An exact-rational linear combination of pibar basis symbols."""

    __slots__ = ("r", "coeffs")

    def __init__(self, r: int, coeffs: dict[Perm, Fraction | int] | None = None):
        self.r = r
        self.coeffs = {w: c for w, c in (coeffs or {}).items() if c}

    def __eq__(self, other) -> bool:
        return isinstance(other, HeckeElt) and self.r == other.r and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.r, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return f"HeckeElt({self.r}, 0)"
        terms = " + ".join(f"{c}*pibar{w}" for w, c in sorted(self.coeffs.items()))
        return f"HeckeElt({self.r}, {terms})"

    def __add__(self, other: "HeckeElt") -> "HeckeElt":
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, 0) + c
        return HeckeElt(self.r, out)

    def __sub__(self, other: "HeckeElt") -> "HeckeElt":
        return self + other.scale(-1)

    def scale(self, c) -> "HeckeElt":
        return HeckeElt(self.r, {w: c * x for w, x in self.coeffs.items()})

    def is_zero(self) -> bool:
        return not self.coeffs


def hecke_one(r: int) -> HeckeElt:
    return HeckeElt(r, {identity_perm(r): 1})


def pibar_elt(r: int, w: Perm) -> HeckeElt:
    return HeckeElt(r, {w: 1})


def _times_pibar_gen(h: HeckeElt, i: int) -> HeckeElt:
    """Right multiplication by pibar_i on the pibar basis."""
    out: dict[Perm, Fraction | int] = {}
    for w, c in h.coeffs.items():
        if i in descents(w):
            out[w] = out.get(w, 0) - c
        else:
            ws = right_mult_s(w, i)
            out[ws] = out.get(ws, 0) + c
    return HeckeElt(h.r, out)


def multiply(a: HeckeElt, b: HeckeElt) -> HeckeElt:
    """Product in the 0-Hecke algebra, by reduced-word evaluation."""
    if a.r != b.r:
        raise ValueError("rank mismatch")
    total = HeckeElt(a.r)
    for v, c in b.coeffs.items():
        term = a.scale(c)
        for i in reduced_word(v):
            term = _times_pibar_gen(term, i)
        total = total + term
    return total


def left_multiply_gen(i: int, h: HeckeElt) -> HeckeElt:
    """pibar_i * h on the pibar basis."""
    out: dict[Perm, Fraction | int] = {}
    for w, c in h.coeffs.items():
        if i in descents(perm_inverse(w)):
            out[w] = out.get(w, 0) - c
        else:
            sw = left_mult_s(w, i)
            out[sw] = out.get(sw, 0) + c
    return HeckeElt(h.r, out)


def pi_elt(r: int, w: Perm) -> HeckeElt:
    """pi_w = product of (pibar_i + 1) along a reduced word, in the pibar basis."""
    out = hecke_one(r)
    for i in reduced_word(w):
        out = _times_pibar_gen(out, i) + out
    return out


def x_bar(lam: Composition, r: int | None = None) -> HeckeElt:
    """Sum of pibar_w over the Young subgroup S_lam.

    Equals pi_{w_0(J)} for J the inner generator index set of S_lam; the
    identity is verified rather than assumed.
    """
    if r is None:
        r = sum(lam)
    if sum(lam) != r:
        raise ValueError("lam must compose r")
    total = HeckeElt(r, {w: 1 for w in young_subgroup(lam)})
    j = young_subgroup_inner_indices(lam)
    assert total == pi_elt(r, longest_element(j, r)), "Young sum != pi of longest element"
    return total


# --- pibar <-> pi basis change and the Frobenius functional ---------------


def _pi_in_pibar_matrix(r: int) -> tuple[list[Perm], list[list]]:
    perms = sorted(all_perms(r), key=lambda w: (perm_length(w), w))
    index = {w: k for k, w in enumerate(perms)}
    rows = []
    for w in perms:
        elt = pi_elt(r, w)
        row = [0] * len(perms)
        for u, c in elt.coeffs.items():
            row[index[u]] = c
        rows.append(row)
    return perms, rows


_EPS_CACHE: dict[int, dict[Perm, Fraction]] = {}


def _eps_table(r: int) -> dict[Perm, Fraction]:
    """eps(pibar_w) for all w: the pi_{w_0} coefficient of pibar_w in the pi basis."""
    if r in _EPS_CACHE:
        return _EPS_CACHE[r]
    perms, rows = _pi_in_pibar_matrix(r)
    k = len(perms)
    w0 = longest_element(frozenset(range(1, r)), r)
    w0_idx = perms.index(w0)
    # pi_w = sum_u A[w][u] pibar_u and eps(pi_w) = delta_{w, w0}, so the
    # values x_u = eps(pibar_u) solve A x = e_{w0}.
    aug = [rows[w] + [1 if w == w0_idx else 0] for w in range(k)]
    reduced, pivots = rref(QMat(aug))
    x = [0] * k
    for row, p in zip(reduced.rows, pivots):
        assert p < k, "pi basis change is singular"
        x[p] = row[-1]
    table = {perms[u]: x[u] for u in range(k)}
    _EPS_CACHE[r] = table
    return table


def frobenius_eps(h: HeckeElt) -> Fraction:
    """The coefficient of pi_{w_0} in the pi-basis expansion of h."""
    table = _eps_table(h.r)
    return sum((c * table[w] for w, c in h.coeffs.items()), Fraction(0))


# --- morphisms --------------------------------------------------------------


def flip_perm(w: Perm) -> Perm:
    """Conjugation by the longest element: s_i -> s_{r-i}."""
    r = len(w)
    return tuple(r + 1 - w[r - 1 - i] for i in range(r))


def morphism_phi(h: HeckeElt) -> HeckeElt:
    """The involution pi_i -> pi_{r-i}; on pibar it permutes the basis."""
    return HeckeElt(h.r, {flip_perm(w): c for w, c in h.coeffs.items()})


def morphism_theta(h: HeckeElt) -> HeckeElt:
    """The involution pi_i -> -obar_i, i.e. pibar_i -> -pibar_i - 1."""
    total = HeckeElt(h.r)
    for w, c in h.coeffs.items():
        term = hecke_one(h.r).scale(c)
        for i in reduced_word(w):
            term = _times_pibar_gen(term, i).scale(-1) - term
        total = total + term
    return total


def antimorphism_chi(h: HeckeElt) -> HeckeElt:
    """The anti-involution fixing every pi_i; on pibar it inverts indices."""
    return HeckeElt(h.r, {perm_inverse(w): c for w, c in h.coeffs.items()})


# --- modules ----------------------------------------------------------------


def simple_F(alpha: Composition) -> AlgModule:
    """The one-dimensional simple module: pibar_i acts by -1 on the descent
    set of alpha and by 0 elsewhere."""
    ds = descent_set(alpha)
    r = ds.r
    actions = {f"pi{i}": QMat([[-1 if i in ds.elements else 0]]) for i in range(1, r)}
    return AlgModule(HECKE, (r,), (f"v_{alpha}",), actions)


def _left_gen_on_vector(vector, i: int, monomial_map) -> list:
    """Apply the monomial left action of pibar_i to a dense coefficient vector."""
    out = [0] * len(vector)
    entries = monomial_map[i]
    for k, c in enumerate(vector):
        if c:
            sign, target = entries[k]
            out[target] += sign * c
    return out


def _hecke_ideal_span(r: int, spanning: list[HeckeElt]) -> SpanBuilder:
    """Span of the left ideal generated by the given elements, saturated
    under left multiplication by the pibar generators."""
    perms = all_perms(r)
    index = {w: k for k, w in enumerate(perms)}
    _, maps = regular_monomial_action(r)

    def to_vec(h: HeckeElt):
        v = [0] * len(perms)
        for w, c in h.coeffs.items():
            v[index[w]] = c
        return v

    span = SpanBuilder(len(perms))
    queue = [to_vec(h) for h in spanning]
    while queue:
        v = queue.pop(0)
        if span.add(v):
            queue.extend(_left_gen_on_vector(v, i, maps) for i in range(1, r))
    return span


def _hecke_subspace_module(r: int, spanning: list[HeckeElt], label_prefix: str) -> AlgModule:
    """Module structure on the left ideal generated by ``spanning``, on the
    canonical RREF basis of its coefficient span."""
    span = _hecke_ideal_span(r, spanning)
    _, maps = regular_monomial_action(r)
    basis = [list(row) for row in span.rows]
    actions = {}
    for i in range(1, r):
        cols = [span.coords(_left_gen_on_vector(v, i, maps)) for v in basis]
        for col in cols:
            if col is None:
                raise ValueError("ideal span is not invariant; saturation bug")
        actions[f"pi{i}"] = QMat(list(zip(*cols))) if cols else QMat([])
    labels = tuple(f"{label_prefix}{k}" for k in range(len(basis)))
    return AlgModule(HECKE, (r,), labels, actions)


def cyclic_generator_R(alpha: Composition) -> HeckeElt:
    """pibar_{w_0(set(alpha))} pi_{w_0(set(alpha)^c)}."""
    ds = descent_set(alpha)
    r = ds.r
    comp = frozenset(range(1, r)) - ds.elements
    return multiply(pibar_elt(r, longest_element(ds.elements, r)),
                    pi_elt(r, longest_element(comp, r)))


def projective_R(alpha: Composition) -> AlgModule:
    """The projective indecomposable module: the cyclic left ideal generated
    by pibar_{w_0(set(alpha))} pi_{w_0(set(alpha)^c)}."""
    r = sum(alpha)
    return _hecke_subspace_module(r, [cyclic_generator_R(alpha)], f"R{alpha}_")


def projective_R_dim(alpha: Composition) -> int:
    """dim R_alpha without building action matrices (cheap at rank 6)."""
    r = sum(alpha)
    return _hecke_ideal_span(r, [cyclic_generator_R(alpha)]).dim


def regular_representation(r: int) -> AlgModule:
    """Left multiplication on the pibar basis; guarded at rank 7."""
    if r > REGULAR_RANK_GUARD:
        raise GuardError(f"regular representation guarded at r <= {REGULAR_RANK_GUARD}")
    perms = all_perms(r)
    index = {w: k for k, w in enumerate(perms)}
    actions = {}
    for i in range(1, r):
        cols = []
        for w in perms:
            col = [0] * len(perms)
            if i in descents(perm_inverse(w)):
                col[index[w]] = -1
            else:
                col[index[left_mult_s(w, i)]] = 1
            cols.append(col)
        actions[f"pi{i}"] = QMat(list(zip(*cols)))
    return AlgModule(HECKE, (r,), tuple(perms), actions)


def regular_monomial_action(r: int):
    """Left multiplication as sign-permutation maps, for large-rank relation
    checks without dense matrices.  Returns (perms, {i: [(sign, target)]})."""
    perms = all_perms(r)
    index = {w: k for k, w in enumerate(perms)}
    maps = {}
    for i in range(1, r):
        entries = []
        for w in perms:
            if i in descents(perm_inverse(w)):
                entries.append((-1, index[w]))
            else:
                entries.append((1, index[left_mult_s(w, i)]))
        maps[i] = entries
    return perms, maps


def monomial_relations_ok(r: int) -> bool:
    """0-Hecke relations for the left regular action, checked monomially."""
    _, maps = regular_monomial_action(r)
    size = len(maps[1]) if r > 1 else 1

    def compose(*indices):
        out = []
        for k in range(size):
            sign, target = 1, k
            for i in reversed(indices):  # rightmost acts first
                s2, target = maps[i][target]
                sign *= s2
            out.append((sign, target))
        return out

    for i in range(1, r):
        lhs = compose(i, i)
        rhs = [(-s, t) for s, t in maps[i]]
        if lhs != rhs:
            return False
    for i in range(1, r - 1):
        if compose(i, i + 1, i) != compose(i + 1, i, i + 1):
            return False
    for i in range(1, r):
        for j in range(i + 2, r):
            if compose(i, j) != compose(j, i):
                return False
    return True


def twist_module(module: AlgModule, morphism: str, variance: str) -> AlgModule:
    """Twist by one of the (anti-)involutions.

    Covariant twists replace the action of pibar_i by that of f(pibar_i);
    contravariant twists act on the dual space, transposing the matrix of
    g(pibar_i).  The twisted module is checked against the defining
    relations.
    """
    r = module.params[0]
    d = module.dim

    def matrix_of(h: HeckeElt) -> QMat:
        out = QMat.zeros(d, d)
        ident = QMat.identity(d)
        for w, c in h.coeffs.items():
            m = ident
            for i in reduced_word(w):
                m = m * module.actions[f"pi{i}"]
            out = out + m.scale(c)
        return out

    morphisms = {"phi": morphism_phi, "theta": morphism_theta, "chi": antimorphism_chi}
    if morphism not in morphisms:
        raise ValueError(f"unsupported morphism tag {morphism}")
    func = morphisms[morphism]
    actions = {}
    for i in range(1, r):
        image = func(pibar_elt(r, right_mult_s(identity_perm(r), i)))
        mat = matrix_of(image)
        if variance == "contravariant":
            mat = mat.transpose()
        elif variance != "covariant":
            raise ValueError("variance must be covariant or contravariant")
        actions[f"pi{i}"] = mat
    twisted = AlgModule(HECKE, (r,), module.labels, actions)
    bad = check_hecke_relations(actions, r)
    assert not bad, f"twisted module violates relations: {bad}"
    return twisted


def descent_class_size(alpha: Composition) -> int:
    """#{w in S_r : Des(w) = set(alpha)}."""
    ds = descent_set(alpha)
    return sum(1 for w in all_perms(ds.r) if descents(w) == ds.elements)
