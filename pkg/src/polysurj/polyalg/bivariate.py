from fractions import Fraction
from math import lcm

from ..exactmath import as_fraction
from .univariate import NEG_INF, UniPoly, _fmt_coeff_term, join_terms


def _mono(i, j):
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


class BiPoly:
    """Sparse polynomial in x and y over Q: map (i, j) -> coefficient of x^i y^j."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms=None):
        self.terms = {
            (int(i), int(j)): as_fraction(c) for (i, j), c in (terms or {}).items() if c != 0
        }
        self._hash = None

    @classmethod
    def const(cls, c):
        return cls({(0, 0): c})

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    @classmethod
    def from_uni(cls, p, var="x"):
        if var == "x":
            return cls({(k, 0): c for k, c in enumerate(p.coeffs)})
        return cls({(0, k): c for k, c in enumerate(p.coeffs)})

    # -- structure

    def is_zero(self):
        return not self.terms

    @property
    def degree(self):
        return max((i + j for i, j in self.terms), default=NEG_INF)

    @property
    def deg_x(self):
        return max((i for i, _ in self.terms), default=NEG_INF)

    @property
    def deg_y(self):
        return max((j for _, j in self.terms), default=NEG_INF)

    def is_constant(self):
        return all(k == (0, 0) for k in self.terms)

    def coeff(self, i, j):
        return self.terms.get((i, j), Fraction(0))

    @property
    def constant_term(self):
        return self.coeff(0, 0)

    def __len__(self):
        return len(self.terms)

    def coeffs_in(self, var):
        """View as a polynomial in ``var`` with UniPoly coefficients in the other variable.

        Returns {power: UniPoly}; the UniPoly is in the remaining variable.
        """
        buckets = {}
        for (i, j), c in self.terms.items():
            outer, inner = (j, i) if var == "y" else (i, j)
            buckets.setdefault(outer, {})[inner] = c
        return {
            k: UniPoly([d.get(m, 0) for m in range(max(d) + 1)]) for k, d in buckets.items()
        }

    def swap(self):
        return BiPoly({(j, i): c for (i, j), c in self.terms.items()})

    def denominator_lcm(self):
        return lcm(1, *(c.denominator for c in self.terms.values()))

    # -- arithmetic

    def _wrap(self, other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return BiPoly({(0, 0): other})
        return None

    def __add__(self, other):
        o = self._wrap(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for k, v in o.terms.items():
            out[k] = out.get(k, 0) + v
        return BiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({k: -v for k, v in self.terms.items()})

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
        for (i, j), a in self.terms.items():
            for (k, l), b in o.terms.items():
                key = (i + k, j + l)
                out[key] = out.get(key, 0) + a * b
        return BiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k):
        if k < 0:
            raise ValueError("negative power of a polynomial")
        result, base = BiPoly({(0, 0): 1}), self
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
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    def __call__(self, x, y):
        total = 0
        xp, yp = {0: 1}, {0: 1}
        for (i, j), c in self.terms.items():
            if i not in xp:
                xp[i] = x**i
            if j not in yp:
                yp[j] = y**j
            total = total + c * xp[i] * yp[j]
        return total

    def substitute(self, x_expr, y_expr):
        return bi_substitute(self, x_expr, y_expr)

    def sorted_terms(self):
        """Terms in graded order, highest total degree first, ties by x-degree."""
        return sorted(self.terms.items(), key=lambda kv: (-(kv[0][0] + kv[0][1]), -kv[0][0]))

    def __str__(self):
        return join_terms([_fmt_coeff_term(c, _mono(i, j)) for (i, j), c in self.sorted_terms()])

    def __repr__(self):
        return f"BiPoly({str(self)!r})"


def bi_substitute(F, x_expr, y_expr):
    """Exact composition F(x_expr, y_expr) with BiPoly (or scalar) arguments."""
    x_expr = x_expr if isinstance(x_expr, BiPoly) else BiPoly.const(x_expr)
    y_expr = y_expr if isinstance(y_expr, BiPoly) else BiPoly.const(y_expr)
    # Horner in y over polynomial-in-x coefficients
    rows = F.coeffs_in("y")
    xpow = {0: BiPoly.const(1)}

    def xp(k):
        if k not in xpow:
            xpow[k] = xp(k - 1) * x_expr
        return xpow[k]

    acc = BiPoly()
    for j in range(F.deg_y if F.terms else -1, -1, -1):
        acc = acc * y_expr
        row = rows.get(j)
        if row is not None:
            acc = acc + sum((xp(k) * c for k, c in row.terms()), BiPoly())
    return acc


class IntEvaluator:
    """Fast exact evaluation of a BiPoly at integer points: F = P / denom with P integral."""

    def __init__(self, F):
        self.denom = F.denominator_lcm()
        rows = {}
        for (i, j), c in F.terms.items():
            rows.setdefault(i, {})[j] = int(c * self.denom)
        self.rows = {
            i: [d.get(j, 0) for j in range(max(d) + 1)] for i, d in rows.items()
        }
        self.deg_x = max(self.rows, default=0)
        self.deg_y = max((len(r) - 1 for r in self.rows.values()), default=0)

    def row_coeffs(self, x):
        """Integer coefficients of P(x, y) as a polynomial in y, low to high."""
        out = [0] * (self.deg_y + 1)
        for i, r in self.rows.items():
            xi = x**i
            for j, c in enumerate(r):
                if c:
                    out[j] += c * xi
        return out

    @staticmethod
    def horner(coeffs, y):
        acc = 0
        for c in reversed(coeffs):
            acc = acc * y + c
        return acc

    def numerator(self, x, y):
        return self.horner(self.row_coeffs(x), y)

    def value(self, x, y):
        n = self.numerator(x, y)
        return n if self.denom == 1 else Fraction(n, self.denom)
