"""Parameterized rational curves, line straightening and pole-order reduction."""

from dataclasses import dataclass
from fractions import Fraction

from ..errors import NonIntegralExponent, NotEmbeddedLine, NotLaurent
from ..exactmath import INFINITY, QuadraticNumber
from ..polyalg import LaurentPoly, RationalFunction, UniPoly, irreducible_factors
from ..polyalg.univariate import squarefree_decomposition
from .ops import AddXPolyToY, AddYPolyToX, ChangeOfVars, Swap

AFFINE = "affine"
PUNCTURED = "punctured"


def _as_rf(h):
    if isinstance(h, RationalFunction):
        return h
    if isinstance(h, LaurentPoly):
        return h.to_rational_function()
    return RationalFunction(h)


@dataclass(frozen=True)
class ParamCurve:
    """t -> (f(t), g(t)).  Affine when both coordinates are polynomials."""

    f: RationalFunction
    g: RationalFunction

    def __post_init__(self):
        object.__setattr__(self, "f", _as_rf(self.f))
        object.__setattr__(self, "g", _as_rf(self.g))
        if self.f.is_constant() and self.g.is_constant():
            raise ValueError("both coordinates are constant")

    @property
    def domain(self):
        if self.f.is_polynomial() and self.g.is_polynomial():
            return AFFINE
        return PUNCTURED

    def __call__(self, t):
        return (self.f(t), self.g(t))

    def degrees(self):
        return DegreePair(_deg(self.f), _deg(self.g))

    def is_axis(self):
        """(a*t + b, 0) or (0, a*t + b) with a != 0."""
        if self.domain != AFFINE:
            return False
        f, g = self.f.num, self.g.num
        return (f.degree == 1 and g.is_zero()) or (g.degree == 1 and f.is_zero())

    def __str__(self):
        return f"({self.f}, {self.g})"


def _deg(h):
    d = h.num.degree - h.den.degree
    return max(d, 0) if not h.is_zero() else 0


@dataclass(frozen=True)
class DegreePair:
    a: int
    b: int

    def precedes(self, other):
        """The partial order: min and max are both componentwise no larger."""
        return min(self.a, self.b) <= min(other.a, other.b) and max(self.a, self.b) <= max(
            other.a, other.b
        )

    @property
    def total(self):
        return self.a + self.b


def apply_curve(op, c):
    f, g = op.apply_curve(c.f, c.g)
    return ParamCurve(f, g)


# --- Abhyankar-Moh straightening -------------------------------------------------


def _cancel_step(f, g):
    """Op cancelling the leading term of the higher-degree coordinate (ties: g)."""
    df, dg = f.degree, g.degree
    if dg >= df:
        if dg % df:
            raise NotEmbeddedLine(f"deg f = {df} and deg g = {dg} do not divide each other")
        d = dg // df
        A = g.lc / f.lc**d
        return AddXPolyToY(UniPoly.monomial(-A, d))
    if df % dg:
        raise NotEmbeddedLine(f"deg f = {df} and deg g = {dg} do not divide each other")
    d = df // dg
    A = f.lc / g.lc**d
    return AddYPolyToX(UniPoly.monomial(-A, d))


def abhyankar_moh_normalize(c):
    """Straighten an embedded affine line onto the x-axis.

    Returns (cov, final) where ``final`` is (a*t + b, 0) and cov maps ``c`` to it.
    Raises NotEmbeddedLine when the degrees stop dividing each other.
    """
    if c.domain != AFFINE:
        raise NotEmbeddedLine("curve is not polynomial")
    ops = []
    cur = c
    budget = c.degrees().total + 3
    while True:
        f, g = cur.f.num, cur.g.num
        df = f.degree if not f.is_constant() else 0
        dg = g.degree if not g.is_constant() else 0
        if df == 0 and dg == 0:
            raise NotEmbeddedLine("parameterization is constant")
        if dg == 0:
            if df != 1:
                raise NotEmbeddedLine(f"x-coordinate of degree {df} over a horizontal line")
            if g.is_zero():
                return ChangeOfVars(tuple(ops)), cur
            op = AddXPolyToY(UniPoly([-g.coeff(0)]))
        elif df == 0:
            if dg != 1:
                raise NotEmbeddedLine(f"y-coordinate of degree {dg} over a vertical line")
            op = Swap()
        else:
            op = _cancel_step(f, g)
        nxt = apply_curve(op, cur)
        if not isinstance(op, Swap) and nxt.degrees().total >= cur.degrees().total and dg and df:
            raise NotEmbeddedLine("leading-term cancellation failed")
        ops.append(op)
        cur = nxt
        budget -= 1
        if budget < 0:
            raise NotEmbeddedLine("no progress")


# --- pole reduction on the punctured line ---------------------------------------


@dataclass(frozen=True)
class Puncture:
    """A pole of the parameterization: INFINITY, or the roots of an irreducible
    factor of degree 1 (rational point) or 2 (conjugate pair)."""

    place: object

    @property
    def points(self):
        return 1 if self.place is INFINITY else self.place.degree

    def pole_order(self, h):
        """Order of the pole of h here (<= 0 means no pole)."""
        if h.is_zero():
            return 0
        if self.place is INFINITY:
            return h.num.degree - h.den.degree
        return -h.multiplicity_in(self.place)

    def root(self):
        """A chosen root: Fraction for linear places, QuadraticNumber for quadratic."""
        q = self.place
        if q.degree == 1:
            return -q.coeff(0) / q.coeff(1)
        b, c = q.coeff(1), q.coeff(0)
        disc = b * b - 4 * c
        if disc <= 0:
            raise ValueError("complex punctures are not supported")
        root = QuadraticNumber.sqrt_of(disc)
        return (root - b) / 2

    def leading_coefficient(self, h, k):
        """c with h ~ c * s^(-k) in the local parameter s (1/t at infinity, t - root else)."""
        if self.place is INFINITY:
            return h.num.lc / h.den.lc
        q = self.place
        theta = self.root()
        rest = h.den
        for _ in range(k):
            rest = rest.exact_div(q)
        denom = rest(theta)
        if q.degree == 2:
            other = (-q.coeff(1)) - theta
            denom = denom * (theta - other) ** k
        return h.num(theta) / denom


def _is_rational(v):
    return isinstance(v, (int, Fraction)) or v.is_rational


def _to_fraction(v):
    return Fraction(v) if isinstance(v, (int, Fraction)) else v.alpha


def find_punctures(c):
    places = []
    for h in (c.f, c.g):
        for part, _ in squarefree_decomposition(h.den):
            for fac in irreducible_factors(part):
                if fac not in places:
                    places.append(fac)
    pun = [Puncture(p) for p in places]
    if any(h.num.degree > h.den.degree for h in (c.f, c.g)):
        pun.append(Puncture(INFINITY))
    if sum(p.points for p in pun) != 2:
        raise ValueError(f"expected the line minus two points, found poles at {len(pun)} places")
    return pun


@dataclass(frozen=True)
class PoleReduction:
    kind: str  # SeparatedPoints | LeftInfinityPoint | IrrationalAsymptotic | DegenerateDoubleCover
    cov: ChangeOfVars
    curve: ParamCurve
    A: object = None
    d: int = None


def _image_at_infinity(pun, c):
    pf, pg = pun.pole_order(c.f), pun.pole_order(c.g)
    if pf <= 0 and pg <= 0:
        return ("finite",)
    if pf > pg:
        return ("x",)
    if pg > pf:
        return ("y",)
    return ("slope", pun.leading_coefficient(c.g, pg) / pun.leading_coefficient(c.f, pf))


def pole_reduce_at_infinity(c, max_steps=1000):
    """Reduce pole orders on a line minus two points until the two punctures land
    on distinct points at infinity, or an irrational asymptotic direction appears."""
    if c.domain == AFFINE:
        raise NotLaurent("curve has no poles at finite parameters or is polynomial")
    ops = []
    cur = c
    for _ in range(max_steps):
        if cur.f.is_constant() or cur.g.is_constant():
            return PoleReduction("DegenerateDoubleCover", ChangeOfVars(tuple(ops)), cur)
        pun = find_punctures(cur)
        if len(pun) == 1:
            imgs = [_image_at_infinity(pun[0], cur)]
            if imgs[0][0] == "slope":
                A = imgs[0][1]
                imgs.append(("slope", A.conjugate() if not _is_rational(A) else A))
            else:
                imgs.append(imgs[0])
        else:
            imgs = [_image_at_infinity(p, cur) for p in pun]
        if any(im[0] == "finite" for im in imgs):
            return PoleReduction("LeftInfinityPoint", ChangeOfVars(tuple(ops)), cur)
        if imgs[0] != imgs[1]:
            return PoleReduction("SeparatedPoints", ChangeOfVars(tuple(ops)), cur)
        kind = imgs[0][0]
        if kind == "x":
            op = Swap()
        elif kind == "slope":
            op = AddXPolyToY(UniPoly([0, -_to_fraction(imgs[0][1])]))
        else:
            cands = [p for p in pun if p.pole_order(cur.f) > 0]
            if not cands:
                return PoleReduction("DegenerateDoubleCover", ChangeOfVars(tuple(ops)), cur)
            p = max(cands, key=lambda p: p.pole_order(cur.g))
            pf, pg = p.pole_order(cur.f), p.pole_order(cur.g)
            if pg % pf:
                raise NonIntegralExponent(f"pole orders {pf} and {pg} do not divide")
            d = pg // pf
            A = p.leading_coefficient(cur.g, pg) / p.leading_coefficient(cur.f, pf) ** d
            if not _is_rational(A):
                return PoleReduction("IrrationalAsymptotic", ChangeOfVars(tuple(ops)), cur, A, d)
            op = AddXPolyToY(UniPoly.monomial(-_to_fraction(A), d))
        ops.append(op)
        cur = apply_curve(op, cur)
    raise RuntimeError("pole reduction did not terminate")
