"""Extended gcd, integrality certificates and integer root finding."""

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ..errors import BothZero, InvariantViolated, NotCoprime, ZeroPolynomial
from ..exactmath import divisors
from .univariate import UniPoly


def uni_ext_gcd(f, g):
    """Return (h, u, v) with u*f + v*g = h and h the monic gcd of f and g."""
    if f.is_zero() and g.is_zero():
        raise BothZero("gcd of two zero polynomials")
    r0, r1 = f, g
    s0, s1 = UniPoly([1]), UniPoly()
    t0, t1 = UniPoly(), UniPoly([1])
    while not r1.is_zero():
        q, r = divmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    c = 1 / r0.lc
    return r0.scale(c), s0.scale(c), t0.scale(c)


@dataclass(frozen=True)
class BezoutCertificate:
    """Integer polynomials r, s and a nonzero integer N with r*f + s*g = N."""

    f: UniPoly
    g: UniPoly
    r: UniPoly
    s: UniPoly
    N: int

    def __post_init__(self):
        if not (self.r.is_integral() and self.s.is_integral()) or self.N == 0:
            raise InvariantViolated("certificate must have integral r, s and nonzero N")
        if self.r * self.f + self.s * self.g - self.N != 0:
            raise InvariantViolated("r*f + s*g != N")


def bezout_certificate(f, g):
    if f.is_constant() and g.is_constant():
        raise ValueError("certificate needs at least one nonconstant polynomial")
    h, u, v = uni_ext_gcd(f, g)
    if not h.is_constant():
        raise NotCoprime(f"gcd({f}, {g}) = {h}")
    # clear denominators only; |N| is not minimized
    N = lcm(u.denominator_lcm(), v.denominator_lcm())
    return BezoutCertificate(f, g, u.scale(N), v.scale(N), N)


# --- integer roots ----------------------------------------------------------


def _eval(cs, x):
    acc = 0
    for c in reversed(cs):
        acc = acc * x + c
    return acc


def _sign(v):
    return (v > 0) - (v < 0)


def _deriv(cs):
    return [k * c for k, c in enumerate(cs)][1:]


def _root_floors(cs, lo, hi):
    """Superset of {floor(r) : r real root of cs in [lo, hi]}, exact integer arithmetic."""
    n = len(cs) - 1
    if n <= 0:
        return set()
    if n == 1:
        r = Fraction(-cs[0], cs[1])
        k = r.numerator // r.denominator
        return {k} if lo <= r <= hi else set()
    crit = _root_floors(_deriv(cs), lo, hi)
    marks = {lo, hi}
    for k in crit:
        marks.update(m for m in (k, k + 1) if lo <= m <= hi)
    marks = sorted(marks)
    out = set()
    for p, q in zip(marks, marks[1:]):
        if q - p == 1 and p in crit:
            out.add(p)
            continue
        # no critical point inside (p, q): monotone, at most one root
        hp, hq = _eval(cs, p), _eval(cs, q)
        if hp == 0:
            out.add(p)
        if hq == 0:
            out.add(q)
        if _sign(hp) * _sign(hq) < 0:
            s = _sign(hp)
            a, b = p, q  # invariant: sign(h(a)) == s != sign(h(b))
            while b - a > 1:
                m = (a + b) // 2
                if _sign(_eval(cs, m)) == s:
                    a = m
                else:
                    b = m
            out.add(a)
    return out


def integer_roots(p):
    """Sorted integer roots of a nonzero polynomial with integer coefficients."""
    if p.is_zero():
        raise ZeroPolynomial("integer roots of the zero polynomial")
    cs = p.primitive().int_coeffs()
    roots = set()
    if cs[0] == 0:
        roots.add(0)
        while cs[0] == 0:
            cs = cs[1:]
    if len(cs) == 1:
        return sorted(roots)
    bound = 1 + max(abs(c) for c in cs[:-1]) // abs(cs[-1]) + 1
    for k in _root_floors(cs, -bound, bound):
        for cand in (k, k + 1):
            if _eval(cs, cand) == 0:
                roots.add(cand)
    return sorted(roots)


# --- integral values of f/g --------------------------------------------------


class _AllIntegers:
    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "ALL_INTEGERS"

    def __contains__(self, t):
        return True


ALL_INTEGERS = _AllIntegers()


@dataclass(frozen=True)
class ResidueClasses:
    """Integers congruent to one of ``residues`` modulo ``modulus``."""

    modulus: int
    residues: tuple

    def __contains__(self, t):
        return t % self.modulus in self.residues


def integral_scaling(f, g):
    """Scale f and g by the lcm of all their denominators (a positive integer)."""
    L = lcm(f.denominator_lcm(), g.denominator_lcm())
    return f.scale(L), g.scale(L)


def integral_value_params(f, g):
    """Integers t with g(t) != 0 and f(t)/g(t) an integer.

    For nonconstant g the answer is a finite sorted list.  For constant g it is
    ``ALL_INTEGERS`` or a :class:`ResidueClasses` (possibly with no residues).
    """
    f, g = integral_scaling(f, g)
    if g.is_zero():
        raise ZeroDivisionError("denominator is the zero polynomial")
    if g.is_constant():
        c = abs(int(g.lc))
        fi = f.int_coeffs() if not f.is_zero() else [0]
        good = tuple(r for r in range(c) if _eval(fi, r) % c == 0)
        if len(good) == c:
            return ALL_INTEGERS
        return ResidueClasses(c, good)
    cert = bezout_certificate(f, g)
    fi, gi = f.int_coeffs() if not f.is_zero() else [0], g.int_coeffs()
    found = set()
    for d in divisors(cert.N):
        for target in (d, -d):
            for t in integer_roots(g - target):
                gt = _eval(gi, t)
                if gt != 0 and _eval(fi, t) % gt == 0:
                    found.add(t)
    return sorted(found)
