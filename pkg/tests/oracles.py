"""Slow, independent reference computations used to cross-check the library."""

from fractions import Fraction
from math import gcd


def _is_prime(n):
    return n > 1 and all(n % d for d in range(2, int(n**0.5) + 1))


def trial_factor(n):
    n = abs(n)
    out = {}
    p = 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return sorted(out.items())


def local_symbol_bruteforce(a, b, p):
    """(a, b)_p for squarefree integers a, b by searching primitive solutions of
    a x^2 + b y^2 = z^2 modulo p^3 (p odd) or 2^5."""
    m = p**3 if p != 2 else 32
    squares = {}
    for z in range(m):
        squares.setdefault(z * z % m, []).append(z)
    for x in range(m):
        for y in range(m):
            for z in squares.get((a * x * x + b * y * y) % m, ()):
                if x % p or y % p or z % p:
                    return 1
    return -1


def genus_by_ramification(points, n):
    """points: list of (number of geometric points, order).  Riemann-Hurwitz with
    e_P = n / gcd(n, order) summed point by point."""
    total = 0
    for count, order in points:
        if order == 0:
            continue
        e = n // gcd(n, order)
        total += count * (e - 1)
    two_g_minus_2 = n * (-2) + total
    assert two_g_minus_2 % 2 == 0
    return (two_g_minus_2 + 2) // 2


def integral_params_bruteforce(f, g, bound=500):
    out = []
    for t in range(-bound, bound + 1):
        gt = g(Fraction(t))
        if gt != 0 and (f(Fraction(t)) / gt).denominator == 1:
            out.append(t)
    return out


def sums_of_two_squares_missing(M):
    hit = {x * x + y * y for x in range(M + 1) for y in range(M + 1)}
    return [v for v in range(M + 1) if v not in hit]


def oracle_cover_exponent(points):
    n = 3
    while not _is_prime(n) or any(o % n == 0 for _, o in points):
        n += 1
    return n
