"""First syzygies of the diamond relations.

A syzygy vector is a map {generator index: Polynomial coefficient}; applying
phi substitutes each basis vector by its binomial and sums.  Vectors are
compared with the Schreyer order induced by the generators' leading monomials.

Besides the Schreyer S-pair generators, this module constructs the named typed
generators attached to pairs of diamonds: strip (S1/S2), L, box (B1/B2), the
G family (G1..G6, G) for pairs of diamonds sharing an element, and the Koszul
diamond type D for element-disjoint pairs.  classify_pair decides which family
a pair of diamonds falls into from its relation profile.
"""

from dataclasses import dataclass

from .errors import ConditionViolated, HibiError, InconsistentProfile
from .polynomials import (
    Polynomial,
    divide,
    mono_div,
    mono_lcm,
    mono_mul,
    s_polynomial,
)

# -- module-element helpers --------------------------------------------------


def vec_add(u, v):
    out = dict(u)
    for i, p in v.items():
        q = out.get(i)
        out[i] = p if q is None else q + p
    return {i: p for i, p in out.items() if not p.is_zero()}


def vec_neg(u):
    return {i: -p for i, p in u.items()}


def vec_sub(u, v):
    return vec_add(u, vec_neg(v))


def vec_mul_term(u, mono, coeff=1):
    return {i: p.mul_term(mono, coeff) for i, p in u.items()}


def vec_is_zero(u):
    return all(p.is_zero() for p in u.values())


def vec_equal_up_to_sign(u, v):
    return vec_sub(u, v) == {} or vec_add(u, v) == {}


def apply_phi(vec, ideal):
    """Substitute each basis vector by its binomial and sum."""
    total = Polynomial.zero(ideal.field, ideal.lattice.n)
    for i, p in vec.items():
        total = total + p * ideal.relations[i].poly
    return total


def render_vec(vec, ideal):
    parts = []
    for i in sorted(vec):
        a, b = ideal.relations[i].pair
        parts.append(f"({ideal.render(vec[i])})*e[{a},{b}]")
    return " + ".join(parts) if parts else "0"


# -- Schreyer order ----------------------------------------------------------


class SchreyerOrder:
    """Order on module terms m*e_i: compare in(m*g_i) in the ring order, and
    break ties by preferring the smaller generator index."""

    def __init__(self, ideal):
        self.ring_order = ideal.order
        self.leads = [r.poly.leading_monomial(ideal.order) for r in ideal.relations]

    def term_key(self, mono, i):
        return (self.ring_order.key(mono_mul(mono, self.leads[i])), -i)

    def leading_term(self, vec):
        """(mono, index, coeff) of the largest module term, or None for 0."""
        best = None
        for i, p in vec.items():
            for m, c in p.coeffs.items():
                k = self.term_key(m, i)
                if best is None or k > best[0]:
                    best = (k, m, i, c)
        return None if best is None else best[1:]


class PositionOrder:
    """Position-over-term order on module terms, later basis vectors first;
    ties within a component broken by the ring order.  Under this order both
    strip generators of a shared diamond lead on their common third component,
    which is what makes their S-vector nontrivial."""

    def __init__(self, ideal):
        self.ring_order = ideal.order

    def term_key(self, mono, i):
        return (i, self.ring_order.key(mono))

    def leading_term(self, vec):
        best = None
        for i, p in vec.items():
            for m, c in p.coeffs.items():
                k = self.term_key(m, i)
                if best is None or k > best[0]:
                    best = (k, m, i, c)
        return None if best is None else best[1:]


def schreyer_cmp(sorder, t1, t2):
    """Compare module terms (mono, index): -1, 0, or 1."""
    k1, k2 = sorder.term_key(*t1), sorder.term_key(*t2)
    return (k1 > k2) - (k1 < k2)


def module_s_vector(u, v, sorder):
    """S-vector of two module elements whose leading terms share an index."""
    mu, iu, cu = sorder.leading_term(u)
    mv, iv, cv = sorder.leading_term(v)
    if iu != iv:
        raise HibiError("leading terms lie on different basis vectors")
    lcm = mono_lcm(mu, mv)
    field = next(iter(u.values())).field
    one = field.one
    return vec_sub(vec_mul_term(u, mono_div(lcm, mu), field.div(one, cu)),
                   vec_mul_term(v, mono_div(lcm, mv), field.div(one, cv)))


def module_divide(vec, divisors, sorder):
    """Division in the free module under the Schreyer order.

    Returns (quotients, remainder); no remainder term is divisible by any
    divisor's leading term (same index, dividing monomial).
    """
    field = None
    for p in list(vec.values()) + [q for d in divisors for q in d.values()]:
        field = p.field
        nvars = p.nvars
        break
    if field is None:
        return [], dict(vec)
    leads = [sorder.leading_term(d) for d in divisors]
    quotients = [Polynomial.zero(field, nvars) for _ in divisors]
    remainder = {}
    work = {i: p for i, p in vec.items() if not p.is_zero()}
    while work:
        m, i, c = sorder.leading_term(work)
        for k, (lm, li, lc) in enumerate(leads):
            if li != i:
                continue
            q = mono_div(m, lm)
            if q is None:
                continue
            t = Polynomial.term(field, nvars, q, field.div(c, lc))
            quotients[k] = quotients[k] + t
            work = vec_sub(work, vec_mul_term(divisors[k], q, field.div(c, lc)))
            break
        else:
            rp = remainder.get(i, Polynomial.zero(field, nvars))
            remainder[i] = rp + Polynomial.term(field, nvars, m, c)
            work = vec_sub(work, {i: Polynomial.term(field, nvars, m, c)})
    return quotients, {i: p for i, p in remainder.items() if not p.is_zero()}


# -- Schreyer pairs -----------------------------------------------------------


def schreyer_pair(i, j, ideal):
    """The syzygy read off from reducing S(f_i, f_j) to zero.

    (lcm/in f_i) e_i - (lcm/in f_j) e_j - sum q_k e_k, where the q_k are the
    division quotients of the S-polynomial against the full generator list.
    """
    polys = ideal.polys
    order = ideal.order
    field = ideal.field
    nvars = ideal.lattice.n
    mi = polys[i].leading_monomial(order)
    mj = polys[j].leading_monomial(order)
    lcm = mono_lcm(mi, mj)
    s = s_polynomial(polys[i], polys[j], order)
    quotients, r = divide(s, polys, order)
    if not r.is_zero():
        raise HibiError("S-polynomial did not reduce to zero")
    vec = {i: Polynomial.term(field, nvars, mono_div(lcm, mi)),
           j: Polynomial.term(field, nvars, mono_div(lcm, mj), -1)}
    for k, q in enumerate(quotients):
        if not q.is_zero():
            vec = vec_sub(vec, {k: q})
    return {k: p for k, p in vec.items() if not p.is_zero()}


# -- pair classification -------------------------------------------------------


COARSE_KINDS = ("strip", "L", "box", "G1", "G2", "G3", "G4", "G5", "G6", "G", "D")

# relation profile bits (r1, r2, r3, r4) for a shared-element pair with
# incomparable b1, b2: r1 = b1 <= a|b2, r2 = b1 >= a&b2, r3 = b2 <= a|b1,
# r4 = b2 >= a&b1; True means the comparison holds, False means incomparable.
_INCOMPARABLE_TABLE = {
    (False, False, False, False): "G",
    (False, False, False, True): "G5",
    (False, False, True, False): "G6",
    (False, False, True, True): "box-swapped",
    (False, True, False, False): "G4",
    (False, True, False, True): "G1",
    (True, False, False, False): "G3",
    (True, False, True, False): "G2",
    (True, True, False, False): "box",
}


def _cross_relations(L, a, b1, b2):
    j, m = L.join, L.meet
    return (L.le(b1, j[a][b2]), L.le(m[a][b2], b1),
            L.le(b2, j[a][b1]), L.le(m[a][b1], b2))


def classify_full(L, p1, p2):
    """(kind, witness): the family of the typed generators for two diamonds.

    The witness is the canonical element tuple the typed formulas plug into:
    (a, b1, b2) for shared-element families, (a1, b1, a2, b2) for D.
    """
    if p1 == p2:
        raise HibiError("the two diamonds must be distinct")
    shared = set(p1) & set(p2)
    if not shared:
        return "D", (*p1, *p2)
    a = next(iter(shared))
    b1 = p1[0] if p1[1] == a else p1[1]
    b2 = p2[0] if p2[1] == a else p2[1]
    if L.incomparable(b1, b2):
        if b2 < b1:
            b1, b2 = b2, b1
        bits = _cross_relations(L, a, b1, b2)
        kind = _INCOMPARABLE_TABLE.get(bits)
        if kind is None:
            raise InconsistentProfile(
                f"profile {bits} for elements ({L.labels[a]},{L.labels[b1]},"
                f"{L.labels[b2]}) matches no family")
        if kind == "box-swapped":
            return "box", (a, b2, b1)
        return kind, (a, b1, b2)
    # comparable side elements: normalize b1 <= b2
    if L.le(b2, b1):
        b1, b2 = b2, b1
    joins_equal = L.join[a][b1] == L.join[a][b2]
    meets_equal = L.meet[a][b1] == L.meet[a][b2]
    if joins_equal and meets_equal:
        raise InconsistentProfile(
            "equal joins and meets force equal elements in a distributive lattice")
    if joins_equal:
        # dual strip configuration: relabel to the standard strip witness
        return "strip", (b1, L.meet[a][b2], a)
    if meets_equal:
        return "strip", (a, b1, b2)
    return "L", (a, b1, b2)


def classify_pair(L, p1, p2):
    return classify_full(L, p1, p2)[0]


# -- typed generators -----------------------------------------------------------


@dataclass(frozen=True)
class TypedSyzygy:
    kind: str
    element: dict
    witness: tuple


FINE_KINDS = ("S1", "S2", "L", "B1", "B2",
              "G1", "G2", "G3", "G4", "G5", "G6", "G", "D")

_FAMILY_TO_FINE = {"strip": ("S1", "S2"), "L": ("L",), "box": ("B1", "B2"),
                   "G1": ("G1",), "G2": ("G2",), "G3": ("G3",), "G4": ("G4",),
                   "G5": ("G5",), "G6": ("G6",), "G": ("G",), "D": ("D",)}


def _require(cond, name):
    if not cond:
        raise ConditionViolated(f"witness violates: {name}")


def _check_conditions(L, kind, witness):
    if kind == "D":
        a1, b1, a2, b2 = witness
        _require(len({a1, b1, a2, b2}) == 4, "four distinct elements")
        _require(L.incomparable(a1, b1), "a1 incomparable to b1")
        _require(L.incomparable(a2, b2), "a2 incomparable to b2")
        return
    a, b1, b2 = witness
    j, m = L.join, L.meet
    _require(L.incomparable(a, b1), "a incomparable to b1")
    _require(L.incomparable(a, b2), "a incomparable to b2")
    _require(b1 != b2, "b1 distinct from b2")
    if kind in ("S1", "S2"):
        _require(L.le(b1, b2), "b1 below b2")
        _require(j[a][b1] != j[a][b2], "joins differ")
        _require(m[a][b1] == m[a][b2], "meets equal")
        return
    if kind == "L":
        _require(L.le(b1, b2), "b1 below b2")
        _require(j[a][b1] != j[a][b2], "joins differ")
        _require(m[a][b1] != m[a][b2], "meets differ")
        return
    _require(L.incomparable(b1, b2), "b1 incomparable to b2")
    r1, r2, r3, r4 = _cross_relations(L, a, b1, b2)
    want = {"B1": (True, True, False, False), "B2": (True, True, False, False),
            "G1": (False, True, False, True), "G2": (True, False, True, False),
            "G3": (True, False, False, False), "G4": (False, True, False, False),
            "G5": (False, False, False, True), "G6": (False, False, True, False),
            "G": (False, False, False, False)}[kind]
    names = ("b1 vs a|b2", "b1 vs a&b2", "b2 vs a|b1", "b2 vs a&b1")
    for got, expect, name in zip((r1, r2, r3, r4), want, names):
        _require(got == expect, f"{name} relation ({'comparable' if expect else 'incomparable'} expected)")


def typed_generator(ideal, kind, witness):
    """The named first-syzygy element of the given kind on the given witness.

    Raises ConditionViolated when the witness fails the kind's defining
    relations; the result always satisfies phi = 0.
    """
    L = ideal.lattice
    if kind not in FINE_KINDS:
        raise HibiError(f"unknown kind {kind!r}")
    _check_conditions(L, kind, witness)
    field = ideal.field
    nvars = L.n

    def var(v):
        return tuple(1 if k == v else 0 for k in range(nvars))

    def eps(x, y, coeff_mono, sign):
        key = (x, y) if (x, y) in ideal.index_of else (y, x)
        if key not in ideal.index_of:
            # the auxiliary pair collapsed to a comparable one; its relation
            # is the zero polynomial, so the term contributes nothing
            return {}
        return {ideal.index_of[key]:
                Polynomial.term(field, nvars, coeff_mono, sign)}

    def combine(*terms):
        out = {}
        for t in terms:
            out = vec_add(out, t)
        return out

    if kind == "D":
        a1, b1, a2, b2 = witness
        f1 = ideal.generator(a1, b1)
        f2 = ideal.generator(a2, b2)
        vec = vec_sub({f1.index: f2.poly}, {f2.index: f1.poly})
    else:
        a, b1, b2 = witness
        j = lambda x, y: L.join[x][y]
        m = lambda x, y: L.meet[x][y]
        if kind == "S1":
            vec = combine(eps(a, b1, var(b2), -1),
                          eps(a, b2, var(b1), 1),
                          eps(b2, j(a, b1), var(m(a, b1)), -1))
        elif kind == "S2":
            vec = combine(eps(a, b1, var(j(a, b2)), 1),
                          eps(a, b2, var(j(a, b1)), -1),
                          eps(b2, j(a, b1), var(a), 1))
        elif kind == "L":
            vec = combine(eps(a, b1, var(b2), -1),
                          eps(a, b2, var(b1), 1),
                          eps(b1, m(a, b2), var(j(a, b2)), 1),
                          eps(b2, j(a, b1), var(m(a, b1)), -1))
        elif kind == "B1":
            vec = combine(eps(a, b1, var(b2), -1),
                          eps(a, b2, var(b1), 1),
                          eps(b2, m(a, b1), var(j(a, b1)), -1),
                          eps(j(a, b1), j(b1, b2), var(m(a, b2)), -1))
        elif kind == "B2":
            vec = combine(eps(a, b2, var(b1), -1),
                          eps(b1, b2, var(a), 1),
                          eps(a, m(b1, b2), var(j(b1, b2)), 1),
                          eps(j(a, b1), j(b1, b2), var(m(a, b2)), 1))
        elif kind == "G1":
            vec = combine(eps(a, b1, var(b2), 1),
                          eps(a, b2, var(b1), -1),
                          eps(b1, j(a, b2), var(m(a, b1)), -1),
                          eps(b2, j(a, b1), var(m(a, b1)), 1))
        elif kind == "G2":
            vec = combine(eps(a, b1, var(b2), 1),
                          eps(a, b2, var(b1), -1),
                          eps(b1, m(a, b2), var(j(a, b1)), -1),
                          eps(b2, m(a, b1), var(j(a, b1)), 1))
        elif kind == "G3":
            vec = combine(eps(a, b1, var(b2), 1),
                          eps(a, b2, var(b1), -1),
                          eps(b1, m(a, b2), var(j(a, b2)), -1),
                          eps(b2, m(a, b1), var(j(a, b1)), 1),
                          eps(j(a, b1), j(b1, b2), var(m(m(a, b1), b2)), 1))
        elif kind == "G4":
            vec = combine(eps(a, b1, var(b2), 1),
                          eps(a, b2, var(b1), -1),
                          eps(b2, j(a, b1), var(m(a, b1)), 1),
                          eps(b1, j(a, b2), var(m(a, b2)), -1),
                          eps(m(a, b1), m(b1, b2), var(j(j(a, b1), b2)), 1))
        elif kind == "G5":
            vec = combine(eps(a, b1, var(b2), 1),
                          eps(a, b2, var(b1), -1),
                          eps(b1, m(a, b2), var(j(a, b2)), -1),
                          eps(b2, j(a, b1), var(m(a, b1)), 1),
                          eps(j(b1, m(a, b2)), j(a, b2), var(m(a, b1)), -1))
        elif kind == "G6":
            vec = combine(eps(a, b1, var(b2), 1),
                          eps(a, b2, var(b1), -1),
                          eps(b1, m(a, b2), var(j(a, b2)), -1),
                          eps(b2, m(a, b1), var(j(a, b1)), 1),
                          eps(j(a, b2), j(b1, b2), var(m(m(a, b1), b2)), -1))
        else:  # kind == "G"
            mm = m(m(a, b1), b2)
            vec = combine(eps(a, b1, var(b2), 1),
                          eps(a, b2, var(b1), -1),
                          eps(b1, m(a, b2), var(j(a, b2)), -1),
                          eps(b2, m(a, b1), var(j(a, b1)), 1),
                          eps(j(b1, m(a, b2)), j(a, b2), var(mm), -1),
                          eps(j(b2, m(a, b1)), j(a, b1), var(mm), 1))
    if not apply_phi(vec, ideal).is_zero():
        raise HibiError(f"internal error: {kind} element on witness {witness} "
                        "is not a syzygy")
    return TypedSyzygy(kind, vec, witness)


def typed_generators_for_pair(ideal, p1, p2):
    """All typed generators attached to a pair of diamonds, classified.

    When an auxiliary pair a formula references collapses to a comparable
    one, its relation is identically zero and the term drops out; an element
    that degenerates to zero entirely is omitted.
    """
    family, witness = classify_full(ideal.lattice, p1, p2)
    out = []
    for fine in _FAMILY_TO_FINE[family]:
        t = typed_generator(ideal, fine, witness)
        if t.element:
            out.append(t)
    return out


def all_typed_generators(ideal):
    pairs = [r.pair for r in ideal.relations]
    out = []
    for i in range(len(pairs)):
        for k in range(i + 1, len(pairs)):
            out.extend(typed_generators_for_pair(ideal, pairs[i], pairs[k]))
    return out


# -- diamond comparability and reducibility -------------------------------------


def diamond_comparable(L, d1, d2):
    """True iff every element of one diamond lies below every element of the
    other (equivalently: one pair's join is below the other pair's meet)."""
    _require_disjoint(L, d1, d2)
    return (L.le(L.join[d1[0]][d1[1]], L.meet[d2[0]][d2[1]])
            or L.le(L.join[d2[0]][d2[1]], L.meet[d1[0]][d1[1]]))


def _require_disjoint(L, d1, d2):
    if len({*d1, *d2}) != 4:
        raise HibiError("diamonds must be element-disjoint")
    if not (L.incomparable(*d1) and L.incomparable(*d2)):
        raise HibiError("both pairs must be incomparable")


def diamond_reducible(L, d1, d2):
    """Whether the diamond-type syzygy of two disjoint diamonds is a
    combination of the shared-element typed generators.

    True for non-comparable diamonds; for comparable ones, true iff some
    diamond (a, b) bridges them: its meet is an element of the lower diamond
    and its join an element of the upper one.
    """
    _require_disjoint(L, d1, d2)
    if not diamond_comparable(L, d1, d2):
        return True
    if L.le(L.join[d2[0]][d2[1]], L.meet[d1[0]][d1[1]]):
        d1, d2 = d2, d1
    for (a, b) in L.incomparable_pairs():
        if L.meet[a][b] in d1 and L.join[a][b] in d2:
            return True
    return False
