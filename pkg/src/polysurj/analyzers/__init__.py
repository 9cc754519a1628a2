"""Obstruction tests and negative-value witnesses."""

from .conic import ConicReport, conic_specialization_test
from .genus import CoverSpec, choose_cover_exponent, cyclic_cover_genus, genus_table
from .normal_forms import (
    AsymptoticSector,
    AxisLinear,
    CuspidalExcluded,
    LinearInSecond,
    NormalForm,
    TorusMonomial,
    TwistedMonomial,
    Unclassified,
    classify_normal_form,
    detect,
)
from .parity import ParityVerdict, parity_obstruction
from .scan import ScanReport, image_scan
from .witness import (
    TRIVIAL_TARGET,
    Witness,
    arbitrarily_negative,
    lattice_search,
    negative_witness,
    sector_form,
)

__all__ = [
    "AsymptoticSector",
    "AxisLinear",
    "ConicReport",
    "CoverSpec",
    "CuspidalExcluded",
    "LinearInSecond",
    "NormalForm",
    "ParityVerdict",
    "ScanReport",
    "TRIVIAL_TARGET",
    "TorusMonomial",
    "TwistedMonomial",
    "Unclassified",
    "Witness",
    "arbitrarily_negative",
    "choose_cover_exponent",
    "classify_normal_form",
    "conic_specialization_test",
    "cyclic_cover_genus",
    "detect",
    "genus_table",
    "image_scan",
    "lattice_search",
    "negative_witness",
    "parity_obstruction",
    "sector_form",
]
