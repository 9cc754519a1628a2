from dataclasses import dataclass
from fractions import Fraction

from ..errors import FactorizationTooHard, ZeroFunction
from ..exactmath import INFINITY
from .univariate import UniPoly, squarefree_decomposition, uni_gcd

FACTOR_MAX_DEGREE = 30
FACTOR_MAX_HEIGHT = 10**6


class RationalFunction:
    """Quotient of univariate polynomials, kept reduced with a monic denominator."""

    __slots__ = ("num", "den")

    def __init__(self, num, den=None):
        num = _as_poly(num)
        den = UniPoly([1]) if den is None else _as_poly(den)
        if den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")
        if num.is_zero():
            self.num, self.den = UniPoly(), UniPoly([1])
            return
        g = uni_gcd(num, den)
        if not g.is_constant():
            num, den = num.exact_div(g), den.exact_div(g)
        c = den.lc
        self.num = num.scale(1 / c)
        self.den = den.scale(1 / c)

    @classmethod
    def t(cls):
        return cls(UniPoly.t())

    def is_zero(self):
        return self.num.is_zero()

    def is_polynomial(self):
        return self.den.is_constant()

    def is_constant(self):
        return self.num.is_constant() and self.den.is_constant()

    def order_at_infinity(self):
        """deg(den) - deg(num): positive for a zero at infinity, negative for a pole."""
        if self.is_zero():
            raise ZeroFunction("order of the zero function")
        return self.den.degree - self.num.degree

    def multiplicity_in(self, factor):
        """Order of vanishing along an irreducible polynomial ``factor``."""
        m = 0
        n = self.num
        while not n.is_zero() and (n % factor).is_zero():
            n = n.exact_div(factor)
            m += 1
        d = self.den
        while (d % factor).is_zero() and not d.is_constant():
            d = d.exact_div(factor)
            m -= 1
        return m

    def _wrap(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, UniPoly)):
            return RationalFunction(other)
        from .laurent import LaurentPoly

        if isinstance(other, LaurentPoly):
            return other.to_rational_function()
        return None

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __sub__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("division by the zero function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k):
        if k < 0:
            return RationalFunction(self.den**-k, self.num**-k)
        return RationalFunction(self.num**k, self.den**k)

    def __eq__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash(("RationalFunction", self.num, self.den))

    def __call__(self, x):
        d = self.den(x)
        if d == 0:
            raise ZeroDivisionError(f"pole at {x}")
        return self.num(x) / d

    def to_string(self, var="t"):
        if self.den == 1:
            return self.num.to_string(var)
        return f"({self.num.to_string(var)})/({self.den.to_string(var)})"

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"RationalFunction({self.to_string()!r})"


def _as_poly(p):
    if isinstance(p, UniPoly):
        return p
    if isinstance(p, (int, Fraction)):
        return UniPoly([p])
    raise TypeError(f"expected a polynomial, got {type(p).__name__}")


@dataclass(frozen=True)
class ZeroPole:
    """Zeros or poles of one Galois orbit: the roots of an irreducible factor over Q
    (``place`` is that monic factor) or the point at infinity."""

    place: object  # UniPoly or INFINITY
    order: int

    @property
    def points(self):
        """Number of geometric points in this class."""
        return 1 if self.place is INFINITY else self.place.degree

    @property
    def root(self):
        """The rational root for a linear factor, else None."""
        if self.place is INFINITY or self.place.degree != 1:
            return None
        return -self.place.coeff(0)

    def __str__(self):
        where = "inf" if self.place is INFINITY else str(self.place)
        return f"({where}, {self.order:+d})"


def irreducible_factors(p):
    """Irreducible monic factors over Q of a squarefree polynomial, with limits."""
    if p.is_constant():
        return []
    prim = p.primitive()
    if prim.degree > FACTOR_MAX_DEGREE or max(abs(c) for c in prim.coeffs) > FACTOR_MAX_HEIGHT:
        raise FactorizationTooHard(f"polynomial {p} exceeds factoring limits")
    if prim.degree == 1:
        return [prim.monic()]
    import sympy

    t = sympy.Symbol("t")
    _, facs = sympy.Poly(list(reversed(prim.int_coeffs())), t).factor_list()
    out = []
    for q, _mult in facs:
        coeffs = [Fraction(int(c)) for c in reversed(q.all_coeffs())]
        out.append(UniPoly(coeffs).monic())
    return out


def _sort_key(zp):
    f = zp.place
    return (zp.order < 0, f.degree, [abs(c) for c in f.coeffs], f.coeffs)


def zero_pole_orders(f):
    """Zero and pole orders of f on P^1, grouped by irreducible factor over Q.

    >>> [str(z) for z in zero_pole_orders(RationalFunction(UniPoly([0, -1, 1])))]
    ['(t, +1)', '(t - 1, +1)', '(inf, -2)']
    """
    if f.is_zero():
        raise ZeroFunction("zero/pole orders of the zero function")
    out = []
    for poly, sign in ((f.num, 1), (f.den, -1)):
        for part, mult in squarefree_decomposition(poly):
            for fac in irreducible_factors(part):
                out.append(ZeroPole(fac, sign * mult))
    out.sort(key=_sort_key)
    at_inf = f.order_at_infinity()
    if at_inf:
        out.append(ZeroPole(INFINITY, at_inf))
    return out
