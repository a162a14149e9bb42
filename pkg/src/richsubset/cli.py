"""Command-line front end.

Every subcommand prints one JSON report on stdout.  Exit status is 0 on
success, 1 on bad input or usage, 2 when an internal check fails.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .exceptions import ValidationError
from .extremal import ExtremalSpec, extremal_instance, extremal_min_size
from .instances import emit_instance, format_rational, parse_instance, parse_rational, random_instance
from .oracle import DEFAULT_MAX_N, brute_min_rich
from .selector import (
    TargetRatio,
    alon_bound,
    is_rich,
    select_rich_subset,
    subset_sum,
    sw_bound,
    target_of,
    upper_bound_f,
)


class UsageError(ValidationError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _ratio(text):
    try:
        return TargetRatio.of(parse_rational(text))
    except ValidationError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _indices(text):
    text = text.strip()
    if not text:
        return []
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad index list {text!r}")


def _vec(values):
    return [format_rational(x) for x in values]


def _load(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ValidationError(f"cannot read {path}: {exc.strerror}")
    return parse_instance(text)


def _write_or_embed(report, key, text, out):
    if out:
        Path(out).write_text(text)
        report[key + "_file"] = str(out)
    else:
        report[key] = json.loads(text)
    return report


def _subset_report(inst, ratio, indices):
    indices = sorted(set(indices))
    return {
        "indices": indices,
        "size": len(indices),
        "bound_f": upper_bound_f(inst.n, inst.d, ratio),
        "sum": _vec(subset_sum(inst, indices)),
        "target": _vec(target_of(inst, ratio)),
        "rich": is_rich(inst, ratio, indices),
    }


def _bounds(n, d, ratio):
    return {
        "f": upper_bound_f(n, d, ratio),
        "sw": format_rational(sw_bound(n, d, ratio)),
        "alon": format_rational(alon_bound(n, d, ratio)),
    }


def cmd_select(args):
    inst, ratio = _load(args.input)
    sel = select_rich_subset(inst, ratio)
    report = _subset_report(inst, ratio, sel.indices)
    if args.trace:
        report["trace"] = [step.to_dict() for step in sel.trace]
    if args.bounds:
        report["bounds_comparison"] = _bounds(inst.n, inst.d, ratio)
    return report


def cmd_bound(args):
    return _bounds(args.N, args.d, args.a)


def cmd_compare_bounds(args):
    b = _bounds(args.N, args.d, args.a)
    return {
        "N": args.N,
        "d": args.d,
        "a": str(args.a),
        "rows": [
            {"name": "subset_bound_f", "value": str(b["f"])},
            {"name": "stromquist_woodall", "value": b["sw"]},
            {"name": "alon_necklace", "value": b["alon"]},
        ],
    }


def cmd_extremal(args):
    spec = ExtremalSpec.build(args.d, args.N, args.a)
    inst = extremal_instance(spec)
    report = {
        "d": spec.d,
        "N": spec.n,
        "a": str(spec.ratio),
        "r": spec.r,
        "m": spec.m,
        "predicted_min": extremal_min_size(spec),
        "bound_f": upper_bound_f(spec.n, spec.d, spec.ratio),
        "tightness_guaranteed": spec.theorem_applies,
    }
    return _write_or_embed(report, "instance", emit_instance(inst, spec.ratio), args.output)


def cmd_oracle(args):
    inst, ratio = _load(args.input)
    res = brute_min_rich(inst, ratio, max_n=args.max_n)
    return {"min_size": res.min_size, "witness": list(res.witness), "explored": res.explored}


def cmd_verify(args):
    inst, ratio = _load(args.input)
    return _subset_report(inst, ratio, args.indices)


def cmd_random(args):
    inst = random_instance(args.seed, args.n, args.d, args.max_den, parse_rational(args.zero_density))
    text = emit_instance(inst, args.a)
    if args.output:
        Path(args.output).write_text(text)
        return {"instance_file": str(args.output), "N": inst.n, "d": inst.d, "a": str(args.a)}
    return json.loads(text)


def build_parser():
    parser = _Parser(prog="richsubset", description="Exact rich-subset selection.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    p = sub.add_parser("select", help="run the selector on an instance file")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--trace", action="store_true", help="include the round-by-round trace")
    p.add_argument("--bounds", action="store_true", help="include f, sw and alon bounds")
    p.set_defaults(func=cmd_select)

    for name, func in (("bound", cmd_bound), ("compare-bounds", cmd_compare_bounds)):
        p = sub.add_parser(name, help="closed-form bounds for N, d, a")
        p.add_argument("-N", type=int, required=True)
        p.add_argument("-d", type=int, required=True)
        p.add_argument("-a", type=_ratio, required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("extremal", help="emit a tight lower-bound instance")
    p.add_argument("-d", type=int, required=True)
    p.add_argument("-a", type=_ratio, required=True)
    p.add_argument("-N", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_extremal)

    p = sub.add_parser("oracle", help="exhaustive minimum rich subset")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", help="check whether given indices are rich")
    p.add_argument("-i", "--input", required=True)
    p.add_argument("--indices", type=_indices, required=True, help="comma-separated 0-based indices")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("random", help="emit a seeded random instance")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--a", type=_ratio, required=True)
    p.add_argument("--max-den", type=int, default=10)
    p.add_argument("--zero-density", default="0")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_random)
    return parser


def run_command(argv, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        report = args.func(args)
    except UsageError as exc:
        print(parser.format_usage().rstrip(), file=stderr)
        print(f"error: {exc}", file=stderr)
        return 1
    except ValidationError as exc:
        print(f"error: {exc}", file=stderr)
        return 1
    except AssertionError as exc:
        print(f"internal check failed: {exc}", file=stderr)
        return 2
    print(json.dumps(report, indent=2), file=stdout)
    return 0


def main(argv=None):
    sys.exit(run_command(sys.argv[1:] if argv is None else argv))


if __name__ == "__main__":
    main()
