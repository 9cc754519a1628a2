from dataclasses import dataclass

from ..errors import ZeroFunction
from ..exactmath import hilbert_global_check

DEFAULT_SAMPLES = range(1, 201)


@dataclass(frozen=True)
class ConicReport:
    failures: tuple  # ((t, failing places), ...)
    clean: int
    skipped: tuple  # samples at zeros or poles of f or g

    def to_json(self):
        return {
            "failures": [
                {"t": str(t), "places": [str(p) for p in places]} for t, places in self.failures
            ],
            "clean": str(self.clean),
            "skipped": [str(t) for t in self.skipped],
        }


def conic_specialization_test(f, g, samples=DEFAULT_SAMPLES):
    """Check local solvability of f(t) X^2 + g(t) Y^2 = Z^2 at each sampled t."""
    if f.is_zero() or g.is_zero():
        raise ZeroFunction("conic coefficients must be nonzero")
    failures, skipped, clean = [], [], 0
    for t in samples:
        try:
            a, b = f(t), g(t)
        except ZeroDivisionError:
            skipped.append(t)
            continue
        if a == 0 or b == 0:
            skipped.append(t)
            continue
        verdict = hilbert_global_check(a, b)
        if verdict.solvable_everywhere:
            clean += 1
        else:
            failures.append((t, verdict.failing))
    return ConicReport(tuple(failures), clean, tuple(skipped))
