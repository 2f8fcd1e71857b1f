"""The lattice binomial ideal of a finite distributive lattice.

Each incomparable pair (a, b) contributes the diamond relation
x_a x_b - x_{a|b} x_{a&b}.  Under the degree-reverse-lexicographic order whose
variable ranking follows a linear extension of the lattice (bottom ranked
highest), these relations are a reduced Groebner basis of the ideal, and the
leading monomial of each is its incomparable product x_a x_b.
"""

from dataclasses import dataclass

from . import polynomials as pa
from .errors import NotGroebner
from .polynomials import QQ, Polynomial, RevLex, divide, s_polynomial


@dataclass(frozen=True)
class DiamondRelation:
    """One generator: the incomparable pair, its binomial, and its position in
    the canonical generator list."""
    pair: tuple
    poly: Polynomial
    index: int


class HibiIdeal:
    """The diamond relations of a lattice, in canonical (min, max) pair order,
    together with the term order that certifies them as a Groebner basis."""

    def __init__(self, lattice, field=QQ):
        self.lattice = lattice
        self.field = field
        n = lattice.n
        rank = [0] * n
        for pos, v in enumerate(lattice.linear_extension()):
            rank[v] = pos
        self.order = RevLex(n, rank)
        self.relations = []
        self.index_of = {}
        for k, (a, b) in enumerate(lattice.incomparable_pairs()):
            mono_ab = _mono(n, a, b)
            mono_jm = _mono(n, lattice.join[a][b], lattice.meet[a][b])
            poly = Polynomial(field, n, {mono_ab: field.one,
                                         mono_jm: field.neg(field.one)})
            self.relations.append(DiamondRelation((a, b), poly, k))
            self.index_of[(a, b)] = k

    def __len__(self):
        return len(self.relations)

    def __iter__(self):
        return iter(self.relations)

    def generator(self, a, b):
        """The relation for an incomparable pair, in either element order."""
        key = (a, b) if (a, b) in self.index_of else (b, a)
        return self.relations[self.index_of[key]]

    @property
    def polys(self):
        return [r.poly for r in self.relations]

    def variable_names(self, style="plain"):
        n = self.lattice.n
        if style == "m2":
            return [f"x_{v + 1}" for v in range(n)]
        if style == "singular":
            return [f"x({v + 1})" for v in range(n)]
        return [f"x{v + 1}" for v in range(n)]

    def render(self, poly, style="plain"):
        return poly.render(self.variable_names(style), self.order)


def _mono(n, *vars_):
    e = [0] * n
    for v in vars_:
        e[v] += 1
    return tuple(e)


def hibi_ideal(lattice, field=QQ):
    return HibiIdeal(lattice, field)


@dataclass(frozen=True)
class CertificateReport:
    pairs_checked: int
    max_intermediate_terms: int
    passed: bool = True


def buchberger_check(ideal):
    """Certify the Groebner property: every S-polynomial of two generators
    reduces to zero against the full generator list."""
    polys = ideal.polys
    order = ideal.order
    checked = 0
    max_terms = 0
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            s = s_polynomial(polys[i], polys[j], order)
            max_terms = max(max_terms, len(s.coeffs))
            _, r = divide(s, polys, order)
            checked += 1
            if not r.is_zero():
                raise NotGroebner((ideal.relations[i].pair, ideal.relations[j].pair))
    return CertificateReport(checked, max_terms)


def normal_form(f, ideal):
    """The unique standard-monomial representative of f modulo the ideal."""
    return pa.normal_form(f, ideal.polys, ideal.order)


def reducedness_holds(ideal):
    """No tail monomial of any generator is divisible by another generator's
    leading monomial."""
    leads = [r.poly.leading_monomial(ideal.order) for r in ideal.relations]
    for r in ideal.relations:
        lead = r.poly.leading_monomial(ideal.order)
        for m in r.poly.coeffs:
            if m == lead:
                continue
            if any(pa.mono_div(m, lm) is not None for lm in leads):
                return False
    return True


# -- exporters -------------------------------------------------------------


def to_macaulay2(ideal):
    n = ideal.lattice.n
    fld = ideal.field
    coeff = "QQ" if fld == QQ else f"ZZ/{fld.p}"
    lines = [f"R = {coeff}[x_1..x_{n}];"]
    if ideal.relations:
        gens = ",\n  ".join(ideal.render(r.poly, "m2") for r in ideal.relations)
        lines.append(f"I = ideal(\n  {gens}\n);")
    else:
        lines.append("I = ideal(0_R);")
    lines.append("betti res I")
    return "\n".join(lines) + "\n"


def to_singular(ideal):
    n = ideal.lattice.n
    fld = ideal.field
    char = "0" if fld == QQ else str(fld.p)
    lines = [f"ring r = {char}, x(1..{n}), dp;"]
    if ideal.relations:
        gens = ",\n  ".join(ideal.render(r.poly, "singular") for r in ideal.relations)
        lines.append(f"ideal I =\n  {gens};")
    else:
        lines.append("ideal I = 0;")
    lines += ["resolution re = mres(I, 0);", "print(betti(re), \"betti\");", "exit;"]
    return "\n".join(lines) + "\n"


def to_json_dict(ideal):
    return {
        "lattice": ideal.lattice.to_json_dict(),
        "field": ideal.field.name,
        "generators": [
            {"pair": list(r.pair), "index": r.index,
             "text": ideal.render(r.poly)}
            for r in ideal.relations
        ],
    }
