"""Exhaustive evaluation of F on an integer box."""

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from ..polyalg import IntEvaluator

NEGATIVE_SAMPLE_CAP = 100


@dataclass(frozen=True)
class ScanReport:
    radius: int
    bound: int
    negatives: tuple  # first points (x, y, value) with value < 0, scan order
    negative_count: int
    represented: tuple
    missing: tuple
    min_value: object
    min_point: tuple

    def to_json(self):
        return {
            "radius": str(self.radius),
            "bound": str(self.bound),
            "negative_count": str(self.negative_count),
            "negatives": [[str(x), str(y), str(v)] for x, y, v in self.negatives],
            "represented": [str(v) for v in self.represented],
            "missing": [str(v) for v in self.missing],
            "min_value": str(self.min_value),
            "min_point": [str(c) for c in self.min_point],
        }


def _scan_rows(F, xs, B, M):
    ev = IntEvaluator(F)
    den = ev.denom
    hits = set()
    negs = []
    neg_count = 0
    best = None
    for x in xs:
        row = ev.row_coeffs(x)
        for y in range(-B, B + 1):
            n = ev.horner(row, y)
            if best is None or n < best[0]:
                best = (n, x, y)
            if n < 0:
                neg_count += 1
                if len(negs) < NEGATIVE_SAMPLE_CAP:
                    negs.append((x, y, n))
            elif n <= M * den and n % den == 0:
                hits.add(n // den)
    return hits, negs, neg_count, best


def _chunks(seq, k):
    size = -(-len(seq) // k)
    return [seq[i : i + size] for i in range(0, len(seq), size)]


def image_scan(F, B, M, workers=1):
    """Evaluate F on [-B, B]^2 and split {0..M} into represented and missing values."""
    if B < 0 or M < 0:
        raise ValueError("box radius and bound must be nonnegative")
    xs = list(range(-B, B + 1))
    if workers > 1 and len(xs) > 1:
        parts = _chunks(xs, workers)
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_scan_rows, [F] * len(parts), parts, [B] * len(parts), [M] * len(parts)))
    else:
        results = [_scan_rows(F, xs, B, M)]
    den = F.denominator_lcm()
    hits, negs, count, best = set(), [], 0, None
    for h, n, c, b in results:  # chunks are in x order, so merging keeps scan order
        hits |= h
        negs.extend(n)
        count += c
        if best is None or b[0] < best[0]:
            best = b
    scale = (lambda v: v) if den == 1 else (lambda v: Fraction(v, den))
    negs = tuple((x, y, scale(v)) for x, y, v in negs[:NEGATIVE_SAMPLE_CAP])
    represented = tuple(sorted(hits))
    missing = tuple(v for v in range(M + 1) if v not in hits)
    return ScanReport(B, M, negs, count, represented, missing, scale(best[0]), best[1:])
