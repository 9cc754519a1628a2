"""Analysis settings, loadable from and savable to a JSON file."""

import json
from dataclasses import asdict, dataclass, fields

from ..analyzers.witness import DEFAULT_BUDGET


def parse_window(text):
    """'a..b' -> range(a, b + 1)."""
    lo, sep, hi = str(text).partition("..")
    if not sep:
        raise ValueError(f"sample window must look like a..b, got {text!r}")
    lo, hi = int(lo), int(hi)
    if hi < lo:
        raise ValueError(f"empty sample window {text!r}")
    return range(lo, hi + 1)


@dataclass
class AnalysisConfig:
    box: int = 200
    naturals: int = 1000
    depth: int = 6
    budget: int = DEFAULT_BUDGET
    samples: str = "1..200"
    cov_depth: int = 3
    exhaustive: bool = False  # treat the scan box as settling every natural <= naturals
    workers: int = 1

    def __post_init__(self):
        for name in ("box", "naturals", "depth", "budget", "cov_depth", "workers"):
            value = getattr(self, name)
            if isinstance(value, bool) or not isinstance(value, int) or value < 1:
                raise ValueError(f"{name} must be a positive integer, got {value!r}")
        parse_window(self.samples)

    @property
    def sample_range(self):
        return parse_window(self.samples)

    def to_dict(self):
        return asdict(self)

    def to_json(self):
        # worker count never changes results, so it stays out of reports
        return {k: str(v).lower() if isinstance(v, bool) else str(v) for k, v in self.to_dict().items() if k != "workers"}

    @classmethod
    def from_dict(cls, data):
        known = {f.name for f in fields(cls)}
        extra = set(data) - known
        if extra:
            raise ValueError(f"unknown config keys: {sorted(extra)}")
        return cls(**data)

    @classmethod
    def load(cls, path):
        with open(path) as fh:
            return cls.from_dict(json.load(fh))

    def save(self, path):
        with open(path, "w") as fh:
            json.dump(self.to_dict(), fh, indent=2)
            fh.write("\n")
