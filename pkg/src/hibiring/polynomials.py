"""Exact multivariate polynomial arithmetic.

Monomials are exponent tuples.  The term order is degree-reverse-lexicographic
with respect to a variable ordering supplied as a rank permutation: among
monomials of equal total degree, the larger one has the smaller exponent at the
highest-ranked position where they differ.  Coefficients live in an exact
field: the rationals or a prime field.
"""

from fractions import Fraction

from .errors import HibiError, ZeroInput


# -- coefficient fields ----------------------------------------------------


class RationalField:
    name = "QQ"

    def of(self, n):
        return Fraction(n)

    zero = Fraction(0)
    one = Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def div(self, a, b):
        return a / b

    def __repr__(self):
        return "QQ"

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("QQ")


class PrimeField:
    def __init__(self, p):
        if p < 2 or any(p % d == 0 for d in range(2, int(p ** 0.5) + 1)):
            raise HibiError(f"{p} is not prime")
        self.p = p
        self.name = f"FP({p})"
        self.zero = 0
        self.one = 1 % p

    def of(self, n):
        return n % self.p

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return -a % self.p

    def div(self, a, b):
        if b % self.p == 0:
            raise ZeroDivisionError("division by zero in prime field")
        return a * pow(b, self.p - 2, self.p) % self.p

    def __repr__(self):
        return self.name

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("FP", self.p))


QQ = RationalField()


# -- monomials -------------------------------------------------------------


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_div(a, b):
    """a / b as a monomial, or None when b does not divide a."""
    q = tuple(x - y for x, y in zip(a, b))
    return q if all(x >= 0 for x in q) else None


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_deg(a):
    return sum(a)


class RevLex:
    """Degree-reverse-lexicographic order.

    rank[v] gives the position of variable v in the variable ordering; the
    variable at rank 0 is the largest.  With rank equal to a linear extension
    of a lattice (bottom first), the incomparable product of every lattice
    binomial x_a x_b - x_{a|b} x_{a&b} is its leading monomial.
    """

    def __init__(self, nvars, rank=None):
        self.nvars = nvars
        if rank is None:
            rank = list(range(nvars))
        if sorted(rank) != list(range(nvars)):
            raise HibiError("rank must be a permutation of the variables")
        self.rank = tuple(rank)
        inverse = [0] * nvars
        for v, r in enumerate(rank):
            inverse[r] = v
        self._by_rank = tuple(inverse)  # variable at each rank position

    def key(self, m):
        """Sort key: bigger key = bigger monomial."""
        return (mono_deg(m), tuple(-m[v] for v in reversed(self._by_rank)))

    def greater(self, a, b):
        return self.key(a) > self.key(b)

    def max(self, monos):
        return max(monos, key=self.key)

    def __eq__(self, other):
        return isinstance(other, RevLex) and other.rank == self.rank

    def __hash__(self):
        return hash(("revlex", self.rank))


# -- polynomials -----------------------------------------------------------


class Polynomial:
    """Immutable polynomial: a monomial-to-coefficient map over a field."""

    __slots__ = ("field", "nvars", "coeffs")

    def __init__(self, field, nvars, coeffs):
        self.field = field
        self.nvars = nvars
        self.coeffs = {m: c for m, c in coeffs.items() if c != field.zero}

    @classmethod
    def zero(cls, field, nvars):
        return cls(field, nvars, {})

    @classmethod
    def term(cls, field, nvars, mono, coeff=1):
        return cls(field, nvars, {mono: field.of(coeff)})

    @classmethod
    def variable(cls, field, nvars, v):
        m = tuple(1 if i == v else 0 for i in range(nvars))
        return cls.term(field, nvars, m)

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        f = self.field
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            out[m] = f.add(out.get(m, f.zero), c)
        return Polynomial(f, self.nvars, out)

    def __neg__(self):
        f = self.field
        return Polynomial(f, self.nvars, {m: f.neg(c) for m, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        f = self.field
        if not isinstance(other, Polynomial):
            c = f.of(other)
            return Polynomial(f, self.nvars,
                              {m: f.mul(c, v) for m, v in self.coeffs.items()})
        out = {}
        for m1, c1 in self.coeffs.items():
            for m2, c2 in other.coeffs.items():
                m = mono_mul(m1, m2)
                out[m] = f.add(out.get(m, f.zero), f.mul(c1, c2))
        return Polynomial(f, self.nvars, out)

    __rmul__ = __mul__

    def mul_term(self, mono, coeff=1):
        f = self.field
        c = f.of(coeff)
        return Polynomial(f, self.nvars,
                          {mono_mul(m, mono): f.mul(c, v) for m, v in self.coeffs.items()})

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((mono_deg(m) for m in self.coeffs), default=-1)

    def is_homogeneous(self):
        return len({mono_deg(m) for m in self.coeffs}) <= 1

    def leading_monomial(self, order):
        if not self.coeffs:
            raise ZeroInput("zero polynomial has no leading monomial")
        return order.max(self.coeffs)

    def leading_term(self, order):
        m = self.leading_monomial(order)
        return m, self.coeffs[m]

    def __eq__(self, other):
        return (isinstance(other, Polynomial) and self.field == other.field
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.field, frozenset(self.coeffs.items())))

    def render(self, names, order=None):
        if not self.coeffs:
            return "0"
        monos = list(self.coeffs)
        if order is not None:
            monos.sort(key=order.key, reverse=True)
        parts = []
        for m in monos:
            c = self.coeffs[m]
            vars_ = "*".join(
                names[v] if e == 1 else f"{names[v]}^{e}"
                for v, e in enumerate(m) if e)
            if vars_ == "":
                body = str(c)
            elif c == self.field.one:
                body = vars_
            elif c == self.field.neg(self.field.one):
                body = "-" + vars_
            else:
                body = f"{c}*{vars_}"
            if parts and not body.startswith("-"):
                parts.append("+" + body)
            else:
                parts.append(body)
        return "".join(parts)

    def __repr__(self):
        names = [f"x{v + 1}" for v in range(self.nvars)]
        return f"Polynomial({self.render(names)})"


def divide(f, divisors, order):
    """Multivariate division: f = sum q_i * divisors_i + r.

    Returns (quotients, remainder) with no remainder monomial divisible by any
    divisor's leading monomial.  Deterministic: at each step the first divisor
    in the list whose leading monomial divides the current leading monomial is
    used.
    """
    fld = f.field
    nvars = f.nvars
    quotients = [Polynomial.zero(fld, nvars) for _ in divisors]
    remainder = {}
    leads = [g.leading_term(order) for g in divisors]
    work = f
    while not work.is_zero():
        m, c = work.leading_term(order)
        for i, (lm, lc) in enumerate(leads):
            q = mono_div(m, lm)
            if q is not None:
                t = Polynomial.term(fld, nvars, q, fld.div(c, lc))
                quotients[i] = quotients[i] + t
                work = work - t * divisors[i]
                break
        else:
            remainder[m] = c
            work = work - Polynomial.term(fld, nvars, m, c)
    return quotients, Polynomial(fld, nvars, remainder)


def normal_form(f, divisors, order):
    return divide(f, divisors, order)[1]


def s_polynomial(f, g, order):
    """S(f, g) = (lcm/lt(f)) f - (lcm/lt(g)) g."""
    mf, cf = f.leading_term(order)
    mg, cg = g.leading_term(order)
    lcm = mono_lcm(mf, mg)
    fld = f.field
    return (f.mul_term(mono_div(lcm, mf), fld.div(fld.one, cf))
            - g.mul_term(mono_div(lcm, mg), fld.div(fld.one, cg)))
