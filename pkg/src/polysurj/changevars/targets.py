from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from ..exactmath import as_fraction
from .ops import AddXPolyToY, AddYPolyToX, ChangeOfVars, ScaleX, ScaleY, Swap


@dataclass(frozen=True)
class CongruenceTarget:
    """Points (x, y) with x - x0 and y - y0 both in N*Z."""

    x0: Fraction
    y0: Fraction
    N: int

    def __post_init__(self):
        object.__setattr__(self, "x0", as_fraction(self.x0))
        object.__setattr__(self, "y0", as_fraction(self.y0))
        if int(self.N) != self.N or self.N < 1:
            raise ValueError(f"modulus must be a positive integer, got {self.N}")
        object.__setattr__(self, "N", int(self.N))

    def contains(self, pt):
        x, y = (as_fraction(c) for c in pt)
        return ((x - self.x0) / self.N).denominator == 1 and (
            (y - self.y0) / self.N
        ).denominator == 1

    @property
    def is_integral(self):
        return self.x0.denominator == 1 and self.y0.denominator == 1

    def to_json(self):
        return {"x0": str(self.x0), "y0": str(self.y0), "N": str(self.N)}


def _shear_modulus(p, base_den, N):
    nonconst = [c for k, c in p.terms() if k > 0]
    if not nonconst:
        return N
    L = lcm(1, *(c.denominator for c in nonconst))
    return N * base_den ** (p.degree - 1) * L


def transport_target(tgt, op):
    """Pull a target back through ``op``.

    The result ``src`` satisfies: whenever a point P meets ``src``, the point
    ``op(P)`` meets ``tgt``.  A ChangeOfVars is handled op by op, last first.
    """
    if isinstance(op, ChangeOfVars):
        for elem in reversed(op.ops):
            tgt = transport_target(tgt, elem)
        return tgt
    x0, y0, N = tgt.x0, tgt.y0, tgt.N
    if isinstance(op, Swap):
        return CongruenceTarget(y0, x0, N)
    if isinstance(op, ScaleX):
        return CongruenceTarget(x0 / op.q, y0, N * op.q.denominator)
    if isinstance(op, ScaleY):
        return CongruenceTarget(x0, y0 / op.q, N * op.q.denominator)
    if isinstance(op, AddXPolyToY):
        return CongruenceTarget(x0, y0 - op.p(x0), _shear_modulus(op.p, x0.denominator, N))
    if isinstance(op, AddYPolyToX):
        return CongruenceTarget(x0 - op.p(y0), y0, _shear_modulus(op.p, y0.denominator, N))
    raise TypeError(f"unknown operation {op!r}")
