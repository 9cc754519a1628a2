from dataclasses import dataclass
from fractions import Fraction

EVEN_SQUARES_ONLY = "EvenSquaresOnly"
ODD_NEGATIVE_VALUES = "OddNegativeValues"
NEGATIVE_EVEN_CASE = "NegativeEvenCase"


@dataclass(frozen=True)
class ParityVerdict:
    kind: str
    negative_half_line: str = None  # "t<0" or "t>0" for odd exponents

    def __str__(self):
        if self.negative_half_line:
            return f"{self.kind}({self.negative_half_line})"
        return self.kind


def parity_obstruction(ell, A):
    """Sign behaviour of t -> t^ell / A along a parameterized curve.

    Odd ell gives negative values on a half-line; even ell with A > 0 only
    positive values; even ell with A < 0 only nonpositive ones.
    """
    A = Fraction(A)
    if ell < 1 or A == 0:
        raise ValueError("need ell >= 1 and A != 0")
    if ell % 2:
        return ParityVerdict(ODD_NEGATIVE_VALUES, "t<0" if A > 0 else "t>0")
    if A > 0:
        return ParityVerdict(EVEN_SQUARES_ONLY)
    return ParityVerdict(NEGATIVE_EVEN_CASE)
