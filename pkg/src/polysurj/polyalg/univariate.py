from fractions import Fraction
from math import lcm

from ..errors import ZeroPolynomial
from ..exactmath import as_fraction

NEG_INF = float("-inf")


def _fmt_coeff_term(c, mono):
    """Render ``c*mono`` as (sign, body) for a nonzero rational c."""
    sign = "-" if c < 0 else "+"
    a = abs(c)
    if not mono:
        return sign, str(a)
    if a == 1:
        return sign, mono
    return sign, f"{a}*{mono}"


def join_terms(parts):
    if not parts:
        return "0"
    out = []
    for k, (sign, body) in enumerate(parts):
        if k == 0:
            out.append(body if sign == "+" else "-" + body)
        else:
            out.append(f" {sign} {body}")
    return "".join(out)


class UniPoly:
    """Dense univariate polynomial over Q; ``coeffs[i]`` multiplies ``t**i``."""

    __slots__ = ("coeffs",)
    var = "t"

    def __init__(self, coeffs=()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def const(cls, c):
        return cls([c])

    @classmethod
    def t(cls):
        return cls([0, 1])

    @classmethod
    def monomial(cls, c, k):
        return cls([0] * k + [c])

    @classmethod
    def from_roots(cls, roots, lc=1):
        p = cls([lc])
        for r in roots:
            p = p * cls([-as_fraction(r), 1])
        return p

    # -- basic structure

    @property
    def degree(self):
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    def is_zero(self):
        return not self.coeffs

    def is_constant(self):
        return len(self.coeffs) <= 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k):
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def is_integral(self):
        return all(c.denominator == 1 for c in self.coeffs)

    def monic(self):
        if not self.coeffs:
            raise ZeroPolynomial("zero polynomial has no leading coefficient")
        return self.scale(1 / self.lc)

    def scale(self, c):
        c = as_fraction(c)
        return UniPoly([c * a for a in self.coeffs])

    def denominator_lcm(self):
        return lcm(1, *(c.denominator for c in self.coeffs))

    def content(self):
        """Positive rational content, so that ``self / content`` is primitive integral."""
        if not self.coeffs:
            return Fraction(0)
        from math import gcd

        L = self.denominator_lcm()
        g = 0
        for c in self.coeffs:
            g = gcd(g, int(c * L))
        return Fraction(g, L)

    def primitive(self):
        """Integral primitive part with positive leading coefficient."""
        p = self.scale(1 / self.content())
        return -p if p.lc < 0 else p

    def int_coeffs(self):
        return [int(c) for c in self.coeffs]

    def derivative(self):
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:])

    # -- arithmetic

    def _wrap(self, other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly([other])
        return None

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        return UniPoly([self.coeff(i) + o.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs])

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
        if not self.coeffs or not o.coeffs:
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = UniPoly([1]), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = len(rem) - len(o.coeffs)
        if dq < 0:
            return UniPoly(), self
        quo = [Fraction(0)] * (dq + 1)
        inv = 1 / o.lc
        for k in range(dq, -1, -1):
            c = rem[k + len(o.coeffs) - 1] * inv
            quo[k] = c
            if c:
                for j, b in enumerate(o.coeffs):
                    rem[k + j] -= c * b
        return UniPoly(quo), UniPoly(rem[: len(o.coeffs) - 1])

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other):
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ValueError(f"{other} does not divide {self}")
        return q

    def __eq__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __call__(self, x):
        """Horner evaluation; ``x`` may be any ring element (numbers, polynomials, functions)."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def compose(self, inner):
        return self(inner) if self.coeffs else UniPoly()

    def terms(self):
        return [(k, c) for k, c in enumerate(self.coeffs) if c]

    def to_string(self, var=None):
        var = var or self.var
        parts = []
        for k in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[k]
            if c:
                mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
                parts.append(_fmt_coeff_term(c, mono))
        return join_terms(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"UniPoly({self.to_string()!r})"


def uni_gcd(f, g):
    """Monic gcd (zero if both inputs are zero)."""
    while not g.is_zero():
        f, g = g, f % g
    return f.monic() if not f.is_zero() else f


def squarefree_decomposition(p):
    """Yun's algorithm: return [(part, multiplicity)] with pairwise coprime squarefree
    monic parts whose product of powers is ``monic(p)``."""
    if p.is_zero():
        raise ZeroPolynomial("squarefree decomposition of zero")
    p = p.monic()
    out = []
    if p.is_constant():
        return out
    dp = p.derivative()
    a = uni_gcd(p, dp)
    b = p.exact_div(a)
    c = dp.exact_div(a)
    d = c - b.derivative()
    k = 1
    while not b.is_constant():
        a = uni_gcd(b, d)
        if not a.is_constant():
            out.append((a, k))
        b = b.exact_div(a)
        c = d.exact_div(a)
        d = c - b.derivative()
        k += 1
    return out
