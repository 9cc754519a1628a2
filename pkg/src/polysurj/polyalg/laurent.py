from fractions import Fraction

from ..exactmath import as_fraction
from .univariate import NEG_INF, UniPoly, _fmt_coeff_term, join_terms


class LaurentPoly:
    """Polynomial in t and 1/t; sparse map exponent -> coefficient."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        self.terms = {int(k): as_fraction(v) for k, v in (terms or {}).items() if v != 0}

    @classmethod
    def const(cls, c):
        return cls({0: c})

    @classmethod
    def monomial(cls, c, k):
        return cls({k: c})

    @classmethod
    def from_unipoly(cls, p):
        return cls(dict(enumerate(p.coeffs)))

    def is_zero(self):
        return not self.terms

    @property
    def ord(self):
        """Lowest exponent present (+inf for zero)."""
        return min(self.terms) if self.terms else float("inf")

    @property
    def deg(self):
        return max(self.terms) if self.terms else NEG_INF

    def is_polynomial(self):
        return not self.terms or self.ord >= 0

    def coeff(self, k):
        return self.terms.get(k, Fraction(0))

    def _wrap(self, other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, UniPoly):
            return LaurentPoly.from_unipoly(other)
        if isinstance(other, (int, Fraction)):
            return LaurentPoly({0: other})
        return None

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in o.terms.items():
            out[k] = out.get(k, 0) + v
        return LaurentPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly({k: -v for k, v in self.terms.items()})

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
        out = {}
        for i, a in self.terms.items():
            for j, b in o.terms.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return LaurentPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            if len(self.terms) != 1:
                raise ValueError("only monomials are invertible Laurent polynomials")
            (e, c), = self.terms.items()
            return LaurentPoly({e * k: c**k})
        result, base = LaurentPoly({0: 1}), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self):
        return hash(("LaurentPoly", frozenset(self.terms.items())))

    def __call__(self, t):
        total = 0
        for k, c in self.terms.items():
            total = total + c * (t**k)
        return total

    def to_rational_function(self):
        from .rational import RationalFunction

        if not self.terms:
            return RationalFunction(UniPoly(), UniPoly([1]))
        shift = min(0, self.ord)
        num = UniPoly([self.coeff(k + shift) for k in range(self.deg - shift + 1)])
        return RationalFunction(num, UniPoly.monomial(1, -shift))

    def to_string(self, var="t"):
        parts = []
        for k in sorted(self.terms, reverse=True):
            c = self.terms[k]
            if k == 0:
                mono = ""
            elif k == 1:
                mono = var
            elif k > 0:
                mono = f"{var}^{k}"
            else:
                mono = f"{var}^({k})"
            parts.append(_fmt_coeff_term(c, mono))
        return join_terms(parts)

    def __str__(self):
        return self.to_string()

    def __repr__(self):
        return f"LaurentPoly({self.to_string()!r})"
