"""Regression corpus: polynomials with expected verdicts and optional golden reports."""

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from ..errors import CorpusFormatError, PolySurjError
from .config import AnalysisConfig
from .parser import parse_bipoly
from .report import analyze


def bundled_corpus_path():
    return Path(str(resources.files("polysurj") / "data" / "corpus.json"))


@dataclass
class CorpusEntry:
    name: str
    polynomial: str
    expected: str
    golden: str = None


@dataclass
class CorpusResult:
    entry: CorpusEntry
    verdict: str
    report: str
    problems: list

    @property
    def ok(self):
        return not self.problems


def load_corpus(path):
    path = Path(path)
    try:
        data = json.loads(path.read_text())
    except json.JSONDecodeError as exc:
        raise CorpusFormatError(f"{path}: not valid JSON ({exc})") from None
    if isinstance(data, list):
        data = {"entries": data}
    if not isinstance(data, dict) or not isinstance(data.get("entries", []), list):
        raise CorpusFormatError(f"{path}: expected an object with an 'entries' list")
    try:
        cfg = AnalysisConfig.from_dict(data.get("config", {}))
    except (TypeError, ValueError) as exc:
        raise CorpusFormatError(f"{path}: bad config ({exc})") from None
    entries = []
    for i, raw in enumerate(data.get("entries", [])):
        if not isinstance(raw, dict) or "polynomial" not in raw or "expected" not in raw:
            raise CorpusFormatError(f"{path}: entry {i} needs 'polynomial' and 'expected'")
        entries.append(
            CorpusEntry(raw.get("name", raw["polynomial"]), raw["polynomial"], raw["expected"], raw.get("golden"))
        )
    return cfg, entries


def run_corpus(path, out_dir=None, workers=None, echo=print):
    """Analyze every entry; returns (exit code, [CorpusResult]).  Exit 0 iff all match."""
    path = Path(path)
    cfg, entries = load_corpus(path)
    if workers:
        cfg.workers = workers
    results = []
    for entry in entries:
        problems = []
        try:
            F = parse_bipoly(entry.polynomial)
            report = analyze(F, cfg)
            verdict, text = report.verdict, report.dumps()
        except (PolySurjError, ValueError) as exc:
            verdict, text = f"error: {exc}", ""
        if verdict != entry.expected:
            problems.append(f"verdict: expected {entry.expected}, got {verdict}")
        if entry.golden and text:
            golden = path.parent / entry.golden
            if not golden.exists():
                problems.append(f"golden file {golden} is missing")
            elif golden.read_text() != text:
                problems.append(f"report differs from {golden}")
        if out_dir is not None and text:
            out = Path(out_dir)
            out.mkdir(parents=True, exist_ok=True)
            (out / f"{_slug(entry.name)}.json").write_text(text)
        results.append(CorpusResult(entry, verdict, text, problems))
        mark = "ok  " if not problems else "FAIL"
        echo(f"{mark} {entry.name}: {verdict}")
        for p in problems:
            echo(f"     - {entry.name}: {p}")
    failed = sum(not r.ok for r in results)
    echo(f"{len(results) - failed}/{len(results)} entries match")
    return (1 if failed else 0), results


def _slug(name):
    keep = "".join(c if c.isalnum() else "_" for c in name)
    return keep.strip("_") or "entry"
