"""Genus of the cyclic cover s^n = f(t) of the projective line."""

from dataclasses import dataclass, field

from ..errors import ConstantFunction, InvariantViolated
from ..exactmath import is_prime
from ..polyalg import RationalFunction, zero_pole_orders


def choose_cover_exponent(f):
    """Smallest prime n >= 3 dividing none of the zero/pole orders of f."""
    if f.is_constant():
        raise ConstantFunction("constant function has no zeros or poles")
    orders = [zp.order for zp in zero_pole_orders(f)]
    n = 3
    while any(o % n == 0 for o in orders) or not is_prime(n):
        n += 2
    return n


@dataclass(frozen=True)
class CoverSpec:
    f: RationalFunction
    n: int
    orders: tuple = field(init=False, repr=False)

    def __post_init__(self):
        if self.f.is_constant():
            raise InvariantViolated("cover of a constant function")
        if self.n < 3 or not is_prime(self.n):
            raise InvariantViolated(f"cover exponent must be a prime >= 3, got {self.n}")
        orders = tuple(zero_pole_orders(self.f))
        bad = [zp for zp in orders if zp.order % self.n == 0]
        if bad:
            raise InvariantViolated(f"n = {self.n} divides the order at {bad[0]}")
        object.__setattr__(self, "orders", orders)

    @property
    def branch_points(self):
        """Number of geometric zeros and poles, the point at infinity included."""
        return sum(zp.points for zp in self.orders)


def cyclic_cover_genus(spec):
    # n prime and coprime to every order: full ramification at each branch point
    k = spec.branch_points
    return (k - 2) * (spec.n - 1) // 2


def genus_table(f, n=None):
    n = choose_cover_exponent(f) if n is None else n
    spec = CoverSpec(f, n)
    return {
        "function": str(f),
        "exponent": n,
        "orders": [str(zp) for zp in spec.orders],
        "branch_points": spec.branch_points,
        "genus": cyclic_cover_genus(spec),
    }
