"""The analysis pipeline and its JSON report."""

import json
from dataclasses import dataclass, field

from ..analyzers import (
    Unclassified,
    arbitrarily_negative,
    classify_normal_form,
    conic_specialization_test,
    genus_table,
    image_scan,
    negative_witness,
    parity_obstruction,
)
from ..analyzers.parity import EVEN_SQUARES_ONLY
from ..errors import PolySurjError
from .config import AnalysisConfig

REPRESENTS_NEGATIVES = "RepresentsNegatives"
INCONCLUSIVE = "Inconclusive"


def misses_natural(M):
    return f"MissesNaturalUpTo({M})"


def _skipped(exc):
    return {"skipped": f"{type(exc).__name__}: {exc}"}


@dataclass
class AnalysisReport:
    input: str
    config: AnalysisConfig
    scan: object
    classification: object
    witnesses: list
    verdict: str
    witness_note: str = None
    conic: object = None
    genus: object = None
    parity: object = None
    extras: dict = field(default_factory=dict)

    @staticmethod
    def _section(value):
        if value is None or isinstance(value, dict):
            return value
        return value.to_json()

    def to_json(self):
        out = {
            "input": self.input,
            "config": self.config.to_json(),
            "scan": self._section(self.scan),
            "classification": self._section(self.classification),
            "witnesses": [w.to_json() for w in self.witnesses],
        }
        if self.witness_note:
            out["witness_note"] = self.witness_note
        if self.conic is not None:
            out["conic"] = self._section(self.conic)
        if self.genus is not None:
            out["genus"] = _stringify(self.genus)
        if self.parity is not None:
            out["parity"] = self.parity if isinstance(self.parity, dict) else str(self.parity)
        out["verdict"] = self.verdict
        return out

    def dumps(self):
        return json.dumps(self.to_json(), indent=2, ensure_ascii=False) + "\n"

    def summary(self):
        lines = [f"input: {self.input}", f"verdict: {self.verdict}"]
        scan = self.scan
        if isinstance(scan, dict):
            lines.append(f"scan: {scan['skipped']}")
        else:
            missing = ", ".join(str(v) for v in scan.missing[:12])
            more = ", ..." if len(scan.missing) > 12 else ""
            lines.append(
                f"scan |x|,|y| <= {scan.radius}: {scan.negative_count} negative values, "
                f"min {scan.min_value} at {scan.min_point}, missing {{{missing}{more}}}"
            )
        cls = self.classification
        lines.append(f"classification: {cls['skipped'] if isinstance(cls, dict) else cls}")
        if not isinstance(cls, dict) and len(cls.cov):
            lines.append(f"  cov: {cls.cov}")
        for w in self.witnesses:
            lines.append(f"witness: F({w.x}, {w.y}) = {w.value}")
        if self.witness_note:
            lines.append(f"witnesses: {self.witness_note}")
        if self.conic is not None:
            c = self.conic
            if isinstance(c, dict):
                lines.append(f"conic: {c['skipped']}")
            else:
                lines.append(f"conic: {c.clean} clean, {len(c.failures)} failing, {len(c.skipped)} skipped")
        if self.genus is not None:
            g = self.genus
            lines.append(f"genus: {g.get('skipped', g.get('genus'))}")
        if self.parity is not None:
            lines.append(f"parity: {self.parity}")
        return "\n".join(lines)


def _stringify(obj):
    if isinstance(obj, dict):
        return {k: _stringify(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_stringify(v) for v in obj]
    return str(obj)


def _witnesses(F, form, scan, cfg):
    """Witness chain, or (partial chain, reason) when the search gives up."""
    if isinstance(form, Unclassified) and (scan is None or isinstance(scan, dict) or not scan.negative_count):
        return [], "skipped: unclassified and no negative value in the scan box"
    try:
        chain = [negative_witness(F, form, budget=cfg.budget)]
    except PolySurjError as exc:
        return [], f"skipped: {type(exc).__name__}: {exc}"
    try:
        chain.extend(arbitrarily_negative(F, form, cfg.depth, budget=cfg.budget))
    except PolySurjError as exc:
        return [w for w in chain if w.verify(F)], f"chain stopped: {type(exc).__name__}: {exc}"
    return [w for w in chain if w.verify(F)], None


def analyze(F, cfg=None, conic=None, genus=None, parity=None, hints=None):
    """Scan, classify and search for witnesses; optional conic, genus and parity sections.

    ``conic`` is a pair (f, g) of rational functions, ``genus`` either a
    rational function or a pair (f, n), ``parity`` a pair (ell, A).
    """
    cfg = cfg or AnalysisConfig()
    if F.is_constant():
        raise ValueError("cannot analyze a constant polynomial")
    try:
        scan = image_scan(F, cfg.box, cfg.naturals, cfg.workers)
    except (PolySurjError, ValueError, ArithmeticError) as exc:
        scan = _skipped(exc)
    try:
        form = classify_normal_form(F, hints=hints, search_depth=cfg.cov_depth)
        classification = form
    except (PolySurjError, ValueError, ArithmeticError) as exc:
        form, classification = None, _skipped(exc)
    witnesses, note = ([], "skipped: no classification") if form is None else _witnesses(F, form, scan, cfg)

    report = AnalysisReport(str(F), cfg, scan, classification, witnesses, INCONCLUSIVE, note)
    if conic is not None:
        try:
            report.conic = conic_specialization_test(conic[0], conic[1], cfg.sample_range)
        except (PolySurjError, ValueError, ArithmeticError) as exc:
            report.conic = _skipped(exc)
    if genus is not None:
        f, n = genus if isinstance(genus, tuple) else (genus, None)
        try:
            report.genus = genus_table(f, n)
        except (PolySurjError, ValueError, ArithmeticError) as exc:
            report.genus = _skipped(exc)
    evidence = False
    if parity is not None:
        try:
            pv = parity_obstruction(*parity)
            report.parity = pv
            evidence = pv.kind == EVEN_SQUARES_ONLY
        except (PolySurjError, ValueError, ArithmeticError) as exc:
            report.parity = _skipped(exc)

    if witnesses:
        report.verdict = REPRESENTS_NEGATIVES
    elif not isinstance(scan, dict) and scan.missing and (evidence or cfg.exhaustive):
        report.verdict = misses_natural(cfg.naturals)
    return report
