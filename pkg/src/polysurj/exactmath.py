"""Exact scalars and multiplicative number theory.

Integers are Python ints and rationals are :class:`fractions.Fraction`; this
module adds what the standard library lacks: factorization, divisor
enumeration, local Hilbert symbols and elements of real quadratic fields.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt, prod

from .errors import FactorizationTooHard, ZeroArgument, ZeroInput

TRIAL_BOUND = 10**6
# first 13 primes are a deterministic Miller-Rabin base set below this bound
MR_LIMIT = 3_317_044_064_679_887_385_961_981
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)


class RealPlace:
    """The archimedean place of Q.  Use the module constant ``INFINITY``."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "inf"

    def __reduce__(self):
        return (RealPlace, ())


INFINITY = RealPlace()


def as_fraction(value):
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(f"not an exact rational: {value!r}")


@lru_cache(maxsize=1)
def _small_primes():
    sieve = bytearray([1]) * (TRIAL_BOUND + 1)
    sieve[0:2] = b"\x00\x00"
    for p in range(2, isqrt(TRIAL_BOUND) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(range(p * p, TRIAL_BOUND + 1, p)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


def _mr_composite(a, d, s, n):
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_prime(n):
    """Deterministic primality test for ``n < MR_LIMIT``."""
    if n < 2:
        return False
    for p in _MR_BASES:
        if n % p == 0:
            return n == p
    if n >= MR_LIMIT:
        raise FactorizationTooHard(f"{n} is beyond the deterministic primality range")
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    return not any(_mr_composite(a, d, s, n) for a in _MR_BASES)


def _pollard_brent(n):
    """Return a nontrivial factor of the odd composite ``n``."""
    for c in range(1, 200):
        y, m, g, r, q = 2, 128, 1, 1, 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                g = gcd(abs(x - ys), n)
        if g != n:
            return g
    raise FactorizationTooHard(f"Pollard rho failed on {n}")


def _split(n, out):
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    d = _pollard_brent(n)
    _split(d, out)
    _split(n // d, out)


@dataclass(frozen=True)
class Factorization:
    sign: int
    factors: tuple  # ((prime, exponent), ...) with primes increasing

    def value(self):
        return self.sign * prod(p**e for p, e in self.factors)

    def primes(self):
        return [p for p, _ in self.factors]

    def __iter__(self):
        return iter(self.factors)


def factorize(n):
    """Factor a nonzero integer into its sign and prime powers.

    >>> factorize(12)
    Factorization(sign=1, factors=((2, 2), (3, 1)))
    """
    n = int(n)
    if n == 0:
        raise ZeroInput("cannot factor zero")
    sign = 1 if n > 0 else -1
    n = abs(n)
    found = {}
    for p in _small_primes():
        if p * p > n:
            break
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            found[p] = e
    if n > 1:
        if n < TRIAL_BOUND * TRIAL_BOUND:
            found[n] = found.get(n, 0) + 1
        elif n >= MR_LIMIT:
            raise FactorizationTooHard(f"cofactor {n} exceeds the supported range")
        else:
            _split(n, found)
    return Factorization(sign, tuple(sorted(found.items())))


def divisors(n):
    """Positive divisors of ``|n|`` in ascending order."""
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def squarefree_decompose(n):
    """Write a nonzero integer as ``s * m**2`` with ``s`` squarefree; return (s, m)."""
    fac = factorize(n)
    s, m = fac.sign, 1
    for p, e in fac:
        if e % 2:
            s *= p
        m *= p ** (e // 2)
    return s, m


# --- Hilbert symbols -------------------------------------------------------


def _valuation(n, p):
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return v, n


def _legendre(a, p):
    r = pow(a % p, (p - 1) // 2, p)
    return -1 if r == p - 1 else r


def _integral_representative(q):
    # (a, b)_v only depends on a modulo squares, so a/d ~ a*d
    q = as_fraction(q)
    if q == 0:
        raise ZeroArgument("Hilbert symbol of zero")
    return q.numerator * q.denominator


def hilbert_symbol(a, b, place):
    """Local Hilbert symbol (a, b)_v for nonzero rationals at a prime or ``INFINITY``."""
    a = _integral_representative(a)
    b = _integral_representative(b)
    if place is INFINITY:
        return -1 if a < 0 and b < 0 else 1
    p = int(place)
    alpha, u = _valuation(a, p)
    beta, v = _valuation(b, p)
    if p == 2:
        eps_u = ((u - 1) // 2) % 2
        eps_v = ((v - 1) // 2) % 2
        om_u = ((u * u - 1) // 8) % 2
        om_v = ((v * v - 1) // 8) % 2
        e = eps_u * eps_v + alpha * om_v + beta * om_u
        return -1 if e % 2 else 1
    sign = -1 if (alpha * beta * ((p - 1) // 2)) % 2 else 1
    if beta % 2:
        sign *= _legendre(u, p)
    if alpha % 2:
        sign *= _legendre(v, p)
    return sign


def relevant_places(a, b):
    """Places where (a, b)_v can be -1: odd primes dividing a or b, then 2, then infinity."""
    primes = set()
    for q in (as_fraction(a), as_fraction(b)):
        for part in (q.numerator, q.denominator):
            primes.update(factorize(part).primes())
    primes.add(2)
    return sorted(primes) + [INFINITY]


@dataclass(frozen=True)
class LocalSolvability:
    failing: tuple  # places where the symbol is -1

    @property
    def solvable_everywhere(self):
        return not self.failing

    def __str__(self):
        if not self.failing:
            return "SolvableEverywhere"
        return "FailsAt([" + ", ".join(str(p) for p in self.failing) + "])"


def hilbert_global_check(a, b):
    a, b = as_fraction(a), as_fraction(b)
    if a == 0 or b == 0:
        raise ZeroArgument("Hilbert symbol of zero")
    return LocalSolvability(
        tuple(v for v in relevant_places(a, b) if hilbert_symbol(a, b, v) == -1)
    )


# --- real quadratic fields -------------------------------------------------


class QuadraticNumber:
    """``alpha + beta*sqrt(D)`` with rational alpha, beta and squarefree D > 1."""

    __slots__ = ("alpha", "beta", "D")

    def __init__(self, alpha, beta, D):
        D = int(D)
        if D <= 1 or squarefree_decompose(D)[1] != 1:
            raise ValueError(f"radicand must be squarefree and > 1, got {D}")
        self.alpha = as_fraction(alpha)
        self.beta = as_fraction(beta)
        self.D = D

    @classmethod
    def sqrt_of(cls, q):
        """Exact square root of a positive non-square rational, as an element of Q(sqrt D)."""
        q = as_fraction(q)
        s, m = squarefree_decompose(q.numerator * q.denominator)
        return cls(0, Fraction(m, q.denominator), s)

    def _coerce(self, other):
        if isinstance(other, QuadraticNumber):
            if other.D != self.D:
                raise ValueError("mixing different quadratic fields")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadraticNumber(other, 0, self.D)
        return NotImplemented

    @property
    def is_rational(self):
        return self.beta == 0

    def conjugate(self):
        return QuadraticNumber(self.alpha, -self.beta, self.D)

    def norm(self):
        return self.alpha**2 - self.beta**2 * self.D

    def sign(self):
        a, b = self.alpha, self.beta
        sa = (a > 0) - (a < 0)
        sb = (b > 0) - (b < 0)
        if sb == 0 or sa == sb:
            return sa if sa else sb
        if sa == 0:
            return sb
        return sa if a * a > b * b * self.D else sb

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber(self.alpha + o.alpha, self.beta + o.beta, self.D)

    __radd__ = __add__

    def __neg__(self):
        return QuadraticNumber(-self.alpha, -self.beta, self.D)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadraticNumber(
            self.alpha * o.alpha + self.beta * o.beta * self.D,
            self.alpha * o.beta + self.beta * o.alpha,
            self.D,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        n = o.norm()
        if n == 0:
            raise ZeroDivisionError("division by zero in quadratic field")
        c = self * o.conjugate()
        return QuadraticNumber(c.alpha / n, c.beta / n, self.D)

    def __rtruediv__(self, other):
        return self._coerce(other) / self

    def __pow__(self, k):
        if k < 0:
            return (1 / self) ** (-k)
        result = QuadraticNumber(1, 0, self.D)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other):
        if isinstance(other, QuadraticNumber):
            return (self.alpha, self.beta, self.D) == (other.alpha, other.beta, other.D)
        if isinstance(other, (int, Fraction)):
            return self.beta == 0 and self.alpha == other
        return NotImplemented

    def __hash__(self):
        if self.beta == 0:
            return hash(self.alpha)
        return hash((self.alpha, self.beta, self.D))

    def __lt__(self, other):
        return (self - other).sign() < 0

    def __gt__(self, other):
        return (self - other).sign() > 0

    def __le__(self, other):
        return (self - other).sign() <= 0

    def __ge__(self, other):
        return (self - other).sign() >= 0

    def __float__(self):
        return float(self.alpha) + float(self.beta) * self.D**0.5

    def __repr__(self):
        return f"QuadraticNumber({self.alpha}, {self.beta}, {self.D})"

    def __str__(self):
        if self.beta == 0:
            return str(self.alpha)
        rad = f"sqrt({self.D})" if self.beta == 1 else f"{self.beta}*sqrt({self.D})"
        if self.alpha == 0:
            return rad
        return f"{self.alpha} + {rad}"
