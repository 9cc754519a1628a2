"""Seeded random generators for library objects."""

from fractions import Fraction

from polysurj.changevars import AddXPolyToY, AddYPolyToX, ChangeOfVars, ScaleX, ScaleY, Swap
from polysurj.analyzers import choose_cover_exponent
from polysurj.errors import FactorizationTooHard
from polysurj.polyalg import RationalFunction, UniPoly, uni_gcd

T = UniPoly.t()


def rational(rng, height=9, den=4):
    return Fraction(rng.randint(-height, height), rng.randint(1, den))


def nonzero_rational(rng, height=9, den=4):
    while True:
        q = rational(rng, height, den)
        if q:
            return q


def uni(rng, degree, height=5, integral=False):
    cs = [rng.randint(-height, height) if integral else rational(rng, height) for _ in range(degree + 1)]
    return UniPoly(cs)


def elementary_op(rng, degree=3, integral=False):
    kind = rng.randrange(5)
    if kind == 0:
        return Swap()
    if kind == 1:
        return ScaleX(rng.choice([1, -1, 2, -2]) if integral else nonzero_rational(rng))
    if kind == 2:
        return ScaleY(rng.choice([1, -1, 2, -2]) if integral else nonzero_rational(rng))
    p = uni(rng, rng.randint(0, degree), integral=integral)
    return AddXPolyToY(p) if kind == 3 else AddYPolyToX(p)


def cov(rng, length, degree=3, integral=False):
    return ChangeOfVars(tuple(elementary_op(rng, degree, integral) for _ in range(rng.randint(0, length))))


def coprime_pair(rng, max_deg=6, height=20):
    while True:
        f = UniPoly([rng.randint(-height, height) for _ in range(rng.randint(1, max_deg + 1))])
        g = UniPoly([rng.randint(-height, height) for _ in range(rng.randint(2, max_deg + 1))])
        if f.is_zero() or g.is_constant():
            continue
        if uni_gcd(f, g).is_constant():
            return f, g


def function_with_known_points(rng, max_deg=8):
    """Build f from distinct linear and irreducible quadratic factors so that its
    geometric zeros and poles are known by construction."""
    roots = rng.sample(range(-9, 10), 6)
    ks = rng.sample(range(1, 12), 3)  # t^2 + k has no rational root for k > 0
    pieces = [(T - r, 1) for r in roots] + [(T**2 + k, 2) for k in ks]
    rng.shuffle(pieces)
    num, den, points = UniPoly([1]), UniPoly([1]), []
    for fac, npts in pieces:
        e = rng.choice([1, 1, 2, 3])
        side = rng.choice(["num", "den", "skip"])
        if side == "num" and num.degree + npts * e <= max_deg:
            num = num * fac**e
            points.append((npts, e))
        elif side == "den" and den.degree + npts * e <= max_deg:
            den = den * fac**e
            points.append((npts, -e))
    c = Fraction(rng.choice([1, -1, 2, 3, -5]))
    inf = den.degree - num.degree
    if inf:
        points.append((1, inf))
    return RationalFunction(num.scale(c), den), points


def within_factoring_limits(f):
    try:
        choose_cover_exponent(f)
    except FactorizationTooHard:
        return False
    return True
