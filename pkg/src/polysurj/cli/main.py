"""Command-line entry point."""

import argparse
import json
import sys
from pathlib import Path

from ..analyzers import (
    arbitrarily_negative,
    classify_normal_form,
    conic_specialization_test,
    genus_table,
    negative_witness,
)
from ..changevars import (
    ChangeOfVars,
    CongruenceTarget,
    ParamCurve,
    abhyankar_moh_normalize,
    pole_reduce_at_infinity,
)
from ..errors import CorpusFormatError, NoWitnessFound, PolySurjError
from .config import AnalysisConfig, parse_window
from .corpus import bundled_corpus_path, run_corpus
from .parser import parse_bipoly, parse_rational
from .report import analyze

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


def _config(args):
    cfg = AnalysisConfig.load(args.config) if args.config else AnalysisConfig()
    for name in ("box", "naturals", "depth", "budget", "samples", "workers"):
        value = getattr(args, name, None)
        if value is not None:
            setattr(cfg, name, value)
    if getattr(args, "exhaustive", False):
        cfg.exhaustive = True
    cfg.__post_init__()
    return cfg


def _load_cov(path):
    return ChangeOfVars.from_json(json.loads(Path(path).read_text()))


def _dump(obj):
    print(json.dumps(obj, indent=2, ensure_ascii=False))


def cmd_analyze(args):
    cfg = _config(args)
    F = parse_bipoly(args.poly)
    conic = (parse_rational(args.conic[0]), parse_rational(args.conic[1])) if args.conic else None
    genus = None
    if args.genus:
        f = parse_rational(args.genus)
        genus = (f, args.exponent) if args.exponent else f
    hints = [_load_cov(args.cov)] if args.cov else None
    report = analyze(F, cfg, conic=conic, genus=genus, hints=hints)
    text = report.dumps()
    if args.json == "-":
        sys.stdout.write(text)
    else:
        print(report.summary())
        if args.json:
            Path(args.json).write_text(text)
    return EXIT_OK


def cmd_genus(args):
    f = parse_rational(args.function)
    _dump({k: str(v) if not isinstance(v, list) else v for k, v in genus_table(f, args.exponent).items()})
    return EXIT_OK


def cmd_conic(args):
    f, g = parse_rational(args.f), parse_rational(args.g)
    rep = conic_specialization_test(f, g, parse_window(args.samples))
    _dump(rep.to_json())
    return EXIT_OK


def cmd_normalize(args):
    curve = ParamCurve(parse_rational(args.f), parse_rational(args.g))
    if curve.domain == "affine":
        cov, final = abhyankar_moh_normalize(curve)
        _dump({"method": "abhyankar-moh", "cov": cov.to_json(), "steps": str(len(cov)), "final": [str(final.f), str(final.g)]})
    else:
        red = pole_reduce_at_infinity(curve)
        out = {"method": "pole-reduction", "kind": red.kind, "cov": red.cov.to_json(), "final": [str(red.curve.f), str(red.curve.g)]}
        if red.A is not None:
            out["A"], out["d"] = str(red.A), str(red.d)
        _dump(out)
    return EXIT_OK


def _target(text):
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 3:
        raise ValueError(f"target must be x0,y0,N, got {text!r}")
    return CongruenceTarget(int(parts[0]), int(parts[1]), int(parts[2]))


def cmd_witness(args):
    F = parse_bipoly(args.poly)
    tgt = _target(args.target)
    hints = [_load_cov(args.cov)] if args.cov else None
    form = classify_normal_form(F, hints=hints)
    found = [negative_witness(F, form, tgt, args.budget)]
    if args.depth:
        found += arbitrarily_negative(F, form, args.depth, tgt, args.budget)
    _dump({"input": str(F), "classification": form.to_json(), "witnesses": [w.to_json() for w in found]})
    return EXIT_OK


def cmd_corpus(args):
    path = args.file or bundled_corpus_path()
    code, _ = run_corpus(path, out_dir=args.out, workers=args.workers)
    return code


def build_parser():
    p = argparse.ArgumentParser(prog="polysurj", description="Obstructions to polynomial surjections Z^2 -> N.")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="scan, classify and look for negative values")
    a.add_argument("poly")
    a.add_argument("--box", type=int)
    a.add_argument("--naturals", type=int)
    a.add_argument("--depth", type=int)
    a.add_argument("--budget", type=int)
    a.add_argument("--samples")
    a.add_argument("--workers", type=int)
    a.add_argument("--exhaustive", action="store_true", help="treat the scan box as exhaustive")
    a.add_argument("--config", help="JSON config file")
    a.add_argument("--conic", nargs=2, metavar=("F", "G"))
    a.add_argument("--genus", metavar="RATIONAL_FUNCTION")
    a.add_argument("--exponent", type=int)
    a.add_argument("--cov", help="JSON change of variables to try first")
    a.add_argument("--json", help="write the JSON report here ('-' for stdout)")
    a.set_defaults(func=cmd_analyze)

    g = sub.add_parser("genus", help="genus of the cyclic cover s^n = f(t)")
    g.add_argument("function")
    g.add_argument("--exponent", type=int)
    g.set_defaults(func=cmd_genus)

    c = sub.add_parser("conic", help="Hilbert-symbol test of f(T) X^2 + g(T) Y^2 = Z^2")
    c.add_argument("f")
    c.add_argument("g")
    c.add_argument("--samples", default="1..200")
    c.set_defaults(func=cmd_conic)

    n = sub.add_parser("normalize", help="straighten a parameterized line")
    n.add_argument("f")
    n.add_argument("g")
    n.set_defaults(func=cmd_normalize)

    w = sub.add_parser("witness", help="integer point with F < 0 in a congruence class")
    w.add_argument("poly")
    w.add_argument("--target", default="0,0,1", help="x0,y0,N")
    w.add_argument("--depth", type=int, default=0)
    w.add_argument("--budget", type=int, default=10**6)
    w.add_argument("--cov")
    w.set_defaults(func=cmd_witness)

    r = sub.add_parser("corpus", help="run a regression corpus (bundled one by default)")
    r.add_argument("file", nargs="?")
    r.add_argument("--out", help="directory for per-entry JSON reports")
    r.add_argument("--workers", type=int)
    r.set_defaults(func=cmd_corpus)
    return p


def _protect_expressions(argv):
    # only long options and -h exist, so "-x^2 - 1" or "-T" must be an expression;
    # a leading space keeps argparse from reading it as a flag
    return [" " + a if a.startswith("-") and len(a) > 1 and not a.startswith("--") and a != "-h" else a for a in argv]


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    args = build_parser().parse_args(_protect_expressions(argv))
    try:
        return args.func(args)
    except NoWitnessFound as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (CorpusFormatError, PolySurjError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
