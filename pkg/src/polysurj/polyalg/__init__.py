"""Exact polynomial algebra over Q."""

from .bivariate import BiPoly, IntEvaluator, bi_substitute
from .certificates import (
    ALL_INTEGERS,
    BezoutCertificate,
    ResidueClasses,
    bezout_certificate,
    integer_roots,
    integral_scaling,
    integral_value_params,
    uni_ext_gcd,
)
from .laurent import LaurentPoly
from .rational import RationalFunction, ZeroPole, irreducible_factors, zero_pole_orders
from .univariate import NEG_INF, UniPoly, squarefree_decomposition, uni_gcd

__all__ = [
    "ALL_INTEGERS",
    "BezoutCertificate",
    "BiPoly",
    "IntEvaluator",
    "LaurentPoly",
    "NEG_INF",
    "RationalFunction",
    "ResidueClasses",
    "UniPoly",
    "ZeroPole",
    "bezout_certificate",
    "bi_substitute",
    "integer_roots",
    "integral_scaling",
    "integral_value_params",
    "irreducible_factors",
    "squarefree_decomposition",
    "uni_ext_gcd",
    "uni_gcd",
    "zero_pole_orders",
]
