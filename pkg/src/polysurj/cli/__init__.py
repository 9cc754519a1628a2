"""Parsing, configuration, the analysis pipeline and the command line."""

from .config import AnalysisConfig
from .corpus import load_corpus, run_corpus
from .parser import parse_bipoly, parse_poly, parse_rational, parse_uni, tokenize
from .report import AnalysisReport, analyze

__all__ = [
    "AnalysisConfig",
    "AnalysisReport",
    "analyze",
    "load_corpus",
    "parse_bipoly",
    "parse_poly",
    "parse_rational",
    "parse_uni",
    "run_corpus",
    "tokenize",
]
