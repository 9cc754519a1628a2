"""Explicit integer points where F is negative, inside a prescribed congruence class.

Each normal form has a direct recipe in its own coordinates; the target is
first pulled back into those coordinates with :func:`transport_target`, and
the point found there is mapped back with the inverse change of variables.
Anything else (or a failed recipe) falls back to a shell-by-shell walk over the
congruence lattice.  Every returned point is re-verified by exact evaluation.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import floor, ceil, isqrt

from ..changevars import AddXPolyToY, ChangeOfVars, CongruenceTarget, pole_reduce_at_infinity, transport_target
from ..errors import NoWitnessFound
from ..polyalg import IntEvaluator, UniPoly
from .normal_forms import (
    AsymptoticSector,
    AxisLinear,
    LinearInSecond,
    TwistedMonomial,
)

DEFAULT_BUDGET = 10**6
TRIVIAL_TARGET = CongruenceTarget(0, 0, 1)


@dataclass(frozen=True)
class Witness:
    x: int
    y: int
    value: object
    target: CongruenceTarget

    def verify(self, F, below=0):
        return (
            F(Fraction(self.x), Fraction(self.y)) == self.value
            and self.value < -below
            and self.target.contains((self.x, self.y))
        )

    def to_json(self):
        return {
            "x": str(self.x),
            "y": str(self.y),
            "value": str(self.value),
            "target": self.target.to_json(),
        }


# --- recipes in normal-form coordinates (goal: shape + offset < 0) -------------


def _axis(tgt, offset):
    u0, N = tgt.x0, tgt.N
    d = max(0, floor((u0 + offset) / N) + 1)
    return (u0 - N * d, tgt.y0)


def _linear_in_second(form, tgt, offset):
    u0, v0, N = tgt.x0, tgt.y0, tgt.N
    for d1 in range(form.f1.degree + 2):
        u = u0 + N * d1
        a = form.f1(u)
        if a != 0:
            break
    b = form.f2(u) + offset
    bound = -b / a
    d2 = floor((bound - v0) / N)
    if a > 0:
        if v0 + N * d2 >= bound:
            d2 -= 1
    else:
        d2 += 1
    return (u, v0 + N * d2)


def _smallest_with_sign(c0, N, sign):
    """Element of c0 + N*Z of the given sign closest to zero."""
    if sign > 0:
        return c0 + N * (floor(-c0 / N) + 1)
    return c0 + N * (ceil(-c0 / N) - 1)


def _iroot_ceil(R, b):
    """Smallest positive integer T with T**b > R (R >= 0 rational)."""
    T = max(1, int(R ** (1.0 / b)) if R < 10**300 else 1)
    while T > 1 and (T - 1) ** b > R:
        T -= 1
    while T**b <= R:
        T = T + 1 if T < 64 else T * 2
    return T


def _twisted(form, tgt, offset):
    u0, v0, N = tgt.x0, tgt.y0, tgt.N
    a, ell, b, p = form.a, form.ell, form.b, form.p
    sc = 1 if form.scale > 0 else -1
    for su, sw in ((1, 1), (1, -1), (-1, 1), (-1, -1)):
        if sc * su**a * sw**b >= 0:
            continue
        u = _smallest_with_sign(u0, N, su)
        slope = u**ell * N  # change in w per unit step of the v-lattice
        w0 = u**ell * v0 + p(u)
        need = form.shift + offset
        R = max(Fraction(0), Fraction(need) / (abs(form.scale) * abs(u) ** a))
        T = _iroot_ceil(R, b)
        sigma = 1 if sw * slope > 0 else -1
        j = sigma * max(0, ceil((T - sw * w0) / abs(slope)))
        for _ in range(64):
            v = v0 + N * j
            if form.shape()(u, v) + offset < 0:
                return (u, v)
            j += sigma * max(1, abs(j))
    raise NoWitnessFound("no sign pattern makes the monomial negative")


def _sector(F, form, tgt, offset, budget):
    A = form.A
    cov = form.cov + AddXPolyToY(UniPoly.monomial(-A.alpha, form.d))
    G = cov.apply_poly(F)
    src = transport_target(tgt, cov.inverse())
    u0, v0, N = src.x0, src.y0, src.N
    spread = abs(float(A.beta)) * A.D**0.5
    tried = 0
    for k in range(1, budget):
        for su in (1, -1):
            u = u0 + su * N * k
            scale = abs(u) ** form.d
            centre = -floor(v0 / N)
            vs = [v0 + N * (centre + j) for j in (-1, 0, 1)]
            for K in (spread / 2, spread * 2, spread * 8, spread * 64):
                for sv in (1, -1):
                    c = Fraction(sv * K) * scale
                    vs.append(v0 + N * floor((c - v0) / N))
            for v in vs:
                tried += 1
                if G(u, v) + offset < 0:
                    return cov.inverse().apply_point((u, v))
            if tried >= budget:
                raise NoWitnessFound("sector search exhausted", budget)
    raise NoWitnessFound("sector search exhausted", budget)


def _recipe(form, tgt, offset):
    if isinstance(form, AxisLinear):
        return _axis(tgt, offset)
    if isinstance(form, LinearInSecond):
        return _linear_in_second(form, tgt, offset)
    if isinstance(form, TwistedMonomial):
        return _twisted(form, tgt, offset)
    return None


# --- lattice fallback -----------------------------------------------------------


def _shell(r):
    if r == 0:
        yield (0, 0)
        return
    for i in range(-r, r + 1):
        yield (i, -r)
        yield (i, r)
    for j in range(-r + 1, r):
        yield (-r, j)
        yield (r, j)


def lattice_search(F, tgt, offset=0, budget=DEFAULT_BUDGET):
    """Walk tgt's lattice in expanding square shells until F + offset < 0."""
    ev = IntEvaluator(F)
    limit = -offset * ev.denom
    x0, y0, N = int(tgt.x0), int(tgt.y0), tgt.N
    rows = {}
    count, r = 0, 0
    while count < budget:
        for i, j in _shell(r):
            x = x0 + N * i
            row = rows.get(x)
            if row is None:
                row = rows[x] = ev.row_coeffs(x)
            if ev.horner(row, y0 + N * j) < limit:
                return (x, y0 + N * j)
            count += 1
            if count >= budget:
                break
        r += 1
    raise NoWitnessFound(f"no negative value within {budget} lattice points", budget)


# --- public entry points ----------------------------------------------------------


def _check_target(tgt):
    if not tgt.is_integral:
        raise ValueError("witness targets need integral x0, y0")


def _point_below(F, form, tgt, offset, budget):
    _check_target(tgt)
    candidate = None
    try:
        if isinstance(form, AsymptoticSector):
            candidate = _sector(F, form, tgt, offset, budget)
        else:
            src = transport_target(tgt, form.cov.inverse())
            q = _recipe(form, src, offset)
            if q is not None:
                candidate = form.cov.inverse().apply_point(q)
    except NoWitnessFound:
        candidate = None
    if candidate is not None:
        x, y = candidate
        if (
            x.denominator == 1
            and y.denominator == 1
            and tgt.contains(candidate)
            and F(x, y) + offset < 0
        ):
            return int(x), int(y)
    return lattice_search(F, tgt, offset, budget)


def _value(F, x, y):
    v = F(Fraction(x), Fraction(y))
    return int(v) if v.denominator == 1 else v


def negative_witness(F, form, tgt=TRIVIAL_TARGET, budget=DEFAULT_BUDGET):
    """Integer point congruent to the target with F < 0, verified exactly."""
    x, y = _point_below(F, form, tgt, 0, budget)
    return Witness(x, y, _value(F, x, y), tgt)


def arbitrarily_negative(F, form, depth, tgt=TRIVIAL_TARGET, budget=DEFAULT_BUDGET):
    """Witnesses with F < -1, F < -10, ..., F < -10**(depth-1).

    Witness k solves the problem for the shifted polynomial F + 10**(k-1).
    """
    out = []
    for k in range(depth):
        bound = 10**k
        x, y = _point_below(F, form, tgt, bound, budget)
        out.append(Witness(x, y, _value(F, x, y), tgt))
    return out


def sector_form(F, curve):
    """AsymptoticSector form for F when ``curve`` parameterizes F = 0 on a line
    minus a conjugate pair of points with irrational asymptotic direction."""
    red = pole_reduce_at_infinity(curve)
    if red.kind != "IrrationalAsymptotic":
        raise ValueError(f"pole reduction ended with {red.kind}, not an irrational asymptote")
    return AsymptoticSector(red.A, red.d, cov=red.cov)
