"""Command-line interface: ``gegenzeros {eval,zeros,bounds,sweep,verify}``.

Exit codes: 0 success, 1 verification failure, 2 usage or parse error,
3 domain error. Errors print their class name on stderr.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from dataclasses import fields, replace
from fractions import Fraction
from pathlib import Path

from .bounds import Verdict, bound_report
from .core import HALF, Params, eval_exact, eval_recurrence, parse_rational, trivial_set
from .errors import GegenbauerError
from .verify import CHECKS, GridSpec, SuiteConfig, run_suite, summarize
from .zeros import zeros

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3
PERTURBATION = Fraction(1, 10**9)
_NEGATIVE_VALUE = re.compile(r"^[-−](\d|\.\d)")


class ConfigError(ValueError):
    @property
    def name(self):
        return type(self).__name__


# ------------------------------------------------------------------ formatting


def fmt(v) -> str:
    """15 significant digits, no locale, no negative zero."""
    if isinstance(v, Fraction):
        return str(v)
    v = float(v)
    if math.isnan(v):
        return "nan"
    s = f"{v:.15g}"
    return "0" if s == "-0" else s


def _jsonable(obj, exact: bool):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v, exact) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v, exact) for v in obj]
    if isinstance(obj, Fraction):
        return str(obj)
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if hasattr(obj, "value") and isinstance(obj.value, str):
        return obj.value
    v = float(obj)
    if not math.isfinite(v):
        return None
    if exact:
        return repr(v)
    return float(fmt(v)) if fmt(v) != "0" else 0.0


def dump_json(obj, exact: bool = False) -> str:
    return json.dumps(_jsonable(obj, exact), indent=2, sort_keys=False) + "\n"


def dump_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([fmt(c) if isinstance(c, float) else c for c in row])
    return buf.getvalue()


def _emit(text: str, output: str | None):
    if output:
        Path(output).write_text(text, encoding="utf-8", newline="\n")
    else:
        sys.stdout.write(text)


# ------------------------------------------------------------------- parsing


def _rational(text: str) -> Fraction:
    try:
        return parse_rational(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _int_list(text: str) -> list:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from exc


def _grid(text: str) -> GridSpec:
    try:
        return GridSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def merge_negative_values(argv: list) -> list:
    """Glue ``--flag -3/4`` into ``--flag=-3/4`` so argparse does not read an option."""
    out = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if (tok.startswith("--") and "=" not in tok and i + 1 < len(argv)
                and _NEGATIVE_VALUE.match(argv[i + 1])):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
            continue
        out.append(tok)
        i += 1
    return out


def _global_flags(parser, defaults: bool):
    d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
    parser.add_argument("--format", choices=("json", "csv", "text"), default=d("text"))
    parser.add_argument("--output", metavar="PATH", default=d(None))
    parser.add_argument("--exact", action="store_true", default=d(False))


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gegenzeros",
        description="Gegenbauer polynomials, their real zeros and bounds for the zero above 1.",
    )
    _global_flags(parser, True)
    common = argparse.ArgumentParser(add_help=False)
    _global_flags(common, False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("eval", parents=[common], help="evaluate C_n^(lambda)(x)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_rational, required=True)
    p.add_argument("--x", type=_rational, required=True)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("zeros", parents=[common], help="all real zeros, decreasing")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_rational, required=True)
    p.set_defaults(func=cmd_zeros)

    p = sub.add_parser("bounds", parents=[common], help="bounds for the largest zero")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=_rational, required=True)
    p.add_argument("--m", type=int, default=1, help="Euler-Rayleigh order (default 1)")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("sweep", parents=[common], help="largest two zeros across a lambda range")
    p.add_argument("--n-list", type=_int_list, default=[8, 9])
    p.add_argument("--lambda-min", type=_rational, default=Fraction(-3, 2))
    p.add_argument("--lambda-max", type=_rational, default=Fraction(0))
    p.add_argument("--steps", type=int, default=300)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", parents=[common], help="run the verification suite")
    p.add_argument("--config", metavar="PATH", help="key = value file")
    p.add_argument("--quick", action="store_true", help="reduced grids")
    p.add_argument("--only", action="append", default=[], metavar="NAMES",
                   help=f"comma-separated subset of: {', '.join(CHECKS)}")
    p.add_argument("--n-max", type=int, help="cap every degree range at this n")
    p.add_argument("--lambda-grid", type=_grid, metavar="START:END:STEPS",
                   help="replace the lambda grids; points are split at -1/2")
    p.add_argument("--report", metavar="PATH", help="write the JSON report here")
    p.set_defaults(func=cmd_verify)
    return parser


# ------------------------------------------------------------------ commands


def cmd_eval(args) -> int:
    p = Params(args.n, args.lam)
    if p.trivial:
        print(f"warning: trivial parameter: C_{p.n}^({p.lam}) is identically zero",
              file=sys.stderr)
    if args.exact:
        value = eval_exact(p, args.x)
        shown = str(value)
    else:
        value = float(eval_recurrence(p, float(args.x)))
        shown = fmt(value)
    if args.format == "json":
        text = dump_json({"n": p.n, "lambda": p.lam, "x": args.x,
                          "value": value}, args.exact)
    elif args.format == "csv":
        text = dump_csv(["n", "lambda", "x", "value"], [[p.n, str(p.lam), str(args.x), shown]])
    else:
        text = shown + "\n"
    _emit(text, args.output)
    return EXIT_OK


def cmd_zeros(args) -> int:
    zs = zeros(Params(args.n, args.lam))
    if args.format == "json":
        text = dump_json({"n": zs.params.n, "lambda": zs.params.lam, "zeros": list(zs.zeros),
                          "outside_count": zs.outside_count, "precision": zs.precision},
                         args.exact)
    elif args.format == "csv":
        text = dump_csv(["k", "zero"], [[k, z] for k, z in enumerate(zs.zeros, 1)])
    else:
        text = "".join(fmt(z) + "\n" for z in zs.zeros)
    _emit(text, args.output)
    return EXIT_OK


def cmd_bounds(args) -> int:
    rep = bound_report(Params(args.n, args.lam), m=args.m)
    d = rep.to_dict()
    if args.format == "json":
        text = dump_json(d, args.exact)
    elif args.format == "csv":
        text = dump_csv(["label", "side", "value", "verdict", "margin", "note"],
                        [[b["label"], b["side"], b["value"], b["verdict"],
                          b["margin"] if b["margin"] is not None else "", b["note"]]
                         for b in d["bounds"]])
    else:
        lines = [f"n={d['n']} lambda={d['lambda']} m={d['m']} x1={fmt(d['witness'])} "
                 f"verdict={d['verdict']}"]
        for b in d["bounds"]:
            line = f"  {b['label']:<18} {b['side']:<5} {fmt(b['value']):<18} {b['verdict']}"
            if b["note"]:
                line += f"  ({b['note']})"
            lines.append(line)
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_FAIL if rep.verdict == Verdict.FAIL else EXIT_OK


# --------------------------------------------------------------------- sweep


def sweep_grid(lam_min: Fraction, lam_max: Fraction, steps: int) -> list:
    """Exact grid points; -3/2 itself is dropped since the range is open there."""
    if lam_min < -Fraction(3, 2):
        raise ValueError(f"lambda-min {lam_min} lies below -3/2")
    if lam_min > lam_max:
        raise ValueError(f"lambda-min {lam_min} exceeds lambda-max {lam_max}")
    if lam_min == lam_max:
        pts = [lam_min]
    else:
        if steps < 2:
            raise ValueError("steps must be >= 2")
        h = (lam_max - lam_min) / steps
        pts = [lam_min + i * h for i in range(steps + 1)]
    pts = [p for p in pts if p > -Fraction(3, 2)]
    if not pts:
        raise ValueError("no grid point inside (-3/2, inf)")
    return pts


def _exceptional(lam: Fraction, n_list) -> bool:
    return lam == -HALF or any(lam in trivial_set(n) for n in n_list)


def row_ordering_ok(lam: Fraction, row: dict, n_list) -> bool:
    """Regime ordering of consecutive degrees present in the row."""
    for n in n_list:
        if n + 1 not in n_list:
            continue
        a1, a2 = row[f"x1_n{n}"], row[f"x2_n{n}"]
        b1, b2 = row[f"x1_n{n + 1}"], row[f"x2_n{n + 1}"]
        chain = [a1, b1, 1.0, b2, a2] if lam < -HALF else [1.0, b1, a1, b2, a2]
        if not all(u > v for u, v in zip(chain, chain[1:])):
            return False
    return True


def build_sweep(n_list, lam_min, lam_max, steps):
    """Rows of (lambda, x1/x2 per degree, 1) with exceptional points nudged up by 1e-9."""
    if any(n < 2 for n in n_list):
        raise ValueError("every degree in the sweep must be >= 2")
    header = ["lambda"]
    for n in n_list:
        header += [f"x1_n{n}", f"x2_n{n}"]
    header.append("one")
    rows, notes, bad = [], [], []
    for lam in sweep_grid(lam_min, lam_max, steps):
        if _exceptional(lam, n_list):
            notes.append(f"note: lambda = {lam} is exceptional; using {lam} + 1e-9")
            lam = lam + PERTURBATION
        row = {"lambda": lam}
        for n in n_list:
            zs = zeros(Params(n, lam)).zeros
            row[f"x1_n{n}"], row[f"x2_n{n}"] = zs[0], zs[1]
        row["one"] = 1.0
        if not row_ordering_ok(lam, row, n_list):
            bad.append(lam)
        rows.append(row)
    return header, rows, notes, bad


def gnuplot_script(csv_name: str, header) -> str:
    lines = [
        'set datafile separator ","',
        'set key autotitle columnhead',
        'set xlabel "lambda"',
        'set ylabel "zeros"',
        'set xrange [-1.5:0]',
        'set yrange [0:1.5]',
    ]
    parts = []
    for i, name in enumerate(header[1:], start=2):
        style = "dashed" if name.startswith("x2") else "solid"
        dt = 2 if style == "dashed" else 1
        parts.append(f'"{csv_name}" using 1:{i} with lines dt {dt} title "{name}"')
    lines.append("plot " + ", \\\n     ".join(parts))
    return "\n".join(lines) + "\n"


def cmd_sweep(args) -> int:
    try:
        header, rows, notes, bad = build_sweep(args.n_list, args.lambda_min, args.lambda_max,
                                               args.steps)
    except ValueError as exc:
        if isinstance(exc, GegenbauerError):
            raise
        print(f"DomainError: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    for note in notes:
        print(note, file=sys.stderr)
    if args.format == "json":
        text = dump_json({"n_list": args.n_list, "columns": header,
                          "rows": [[r[c] for c in header] for r in rows]}, args.exact)
    else:
        text = dump_csv(header, [[fmt(float(r["lambda"]))] + [r[c] for c in header[1:]]
                                 for r in rows])
    _emit(text, args.output)
    if args.output and args.format != "json":
        out = Path(args.output)
        out.with_suffix(".gp").write_text(gnuplot_script(out.name, header), encoding="utf-8",
                                          newline="\n")
    if bad:
        print(f"ordering violated at lambda = {', '.join(str(b) for b in bad)}", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


# -------------------------------------------------------------------- verify

_INT_KEYS = {f.name for f in fields(SuiteConfig) if f.type in ("int", int)}
_FLOAT_KEYS = {f.name for f in fields(SuiteConfig) if f.type in ("float", float)}


def parse_config(text: str, base: SuiteConfig | None = None) -> SuiteConfig:
    """``key = value`` lines; ``#`` starts a comment.

    Grids are ``start:end:steps``: ``lambda_grid`` replaces every lambda list
    (points split at -1/2), ``quasi_grid`` and ``orth_grid`` replace one each.
    ``checks`` and ``quasi_orth_lambdas`` take comma-separated lists,
    ``quick`` takes true/false and must come first to take effect on grids.
    """
    cfg = base or SuiteConfig()
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"line {lineno}: expected key = value, got {raw!r}")
        key, value = (s.strip() for s in line.split("=", 1))
        key = key.replace("-", "_")
        try:
            if key == "quick":
                if value.lower() not in ("true", "false", "1", "0", "yes", "no"):
                    raise ValueError(f"expected a boolean, got {value!r}")
                if value.lower() in ("true", "1", "yes"):
                    cfg = SuiteConfig.quick(checks=cfg.checks)
            elif key == "lambda_grid":
                cfg = cfg.with_lambdas(GridSpec.parse(value).points())
            elif key in ("quasi_grid", "orth_grid"):
                pts = tuple(GridSpec.parse(value).points())
                cfg = replace(cfg, **{key.replace("grid", "lambdas"): pts})
            elif key == "checks":
                names = tuple(s.strip() for s in value.split(",") if s.strip())
                unknown = [s for s in names if s not in CHECKS]
                if unknown:
                    raise ValueError(f"unknown checks {unknown}")
                cfg = replace(cfg, checks=names)
            elif key == "quasi_orth_lambdas":
                cfg = replace(cfg, quasi_orth_lambdas=tuple(
                    parse_rational(s) for s in value.split(",") if s.strip()))
            elif key in _INT_KEYS:
                cfg = replace(cfg, **{key: int(value)})
            elif key in _FLOAT_KEYS:
                cfg = replace(cfg, **{key: float(value)})
            else:
                raise ValueError(f"unknown key {key!r}")
        except (ValueError, TypeError) as exc:
            raise ConfigError(f"line {lineno}: {exc}") from exc
    return cfg


def _verify_config(args) -> SuiteConfig:
    cfg = SuiteConfig.quick() if args.quick else SuiteConfig()
    if args.config:
        try:
            text = Path(args.config).read_text(encoding="utf-8")
        except OSError as exc:
            raise ConfigError(f"cannot read config: {exc}") from exc
        cfg = parse_config(text, cfg)
    if args.only:
        names = tuple(s.strip() for item in args.only for s in item.split(",") if s.strip())
        unknown = [s for s in names if s not in CHECKS]
        if unknown:
            raise ConfigError(f"unknown checks: {', '.join(unknown)}")
        cfg = replace(cfg, checks=names)
    if args.n_max is not None:
        cfg = replace(cfg, n_max=args.n_max, n_max_bounds=args.n_max,
                      n_max_derivative=args.n_max, n_max_identity=args.n_max,
                      n_max_quasi_orth=args.n_max)
    if args.lambda_grid is not None:
        cfg = cfg.with_lambdas(args.lambda_grid.points())
    return cfg


def cmd_verify(args) -> int:
    try:
        cfg = _verify_config(args)
    except ConfigError as exc:
        print(f"{exc.name}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    results = run_suite(cfg)
    summary = summarize(results)
    report = {"config": cfg.to_dict(), "summary": summary,
              "results": [r.to_dict() for r in results]}
    if args.report:
        Path(args.report).write_text(dump_json(report, args.exact), encoding="utf-8",
                                     newline="\n")
    if args.format == "json":
        text = dump_json(report, args.exact)
    elif args.format == "csv":
        text = dump_csv(["name", "params", "status", "margin"],
                        [[r.name, r.params, r.status, r.margin] for r in results])
    else:
        per: dict = {}
        for r in results:
            per.setdefault(r.name, {}).setdefault(r.status, 0)
            per[r.name][r.status] += 1
        lines = [f"{name:<24} " + " ".join(f"{k}={v}" for k, v in sorted(c.items()))
                 for name, c in per.items()]
        lines += [f"FAIL {r.name} {r.params} margin={fmt(r.margin)}"
                  for r in results if not r.ok]
        lines.append(f"total={summary['total']} ok={summary['ok']}")
        text = "\n".join(lines) + "\n"
    _emit(text, args.output)
    return EXIT_OK if summary["ok"] else EXIT_FAIL


# ---------------------------------------------------------------------- main


def main(argv=None) -> int:
    argv = merge_negative_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except GegenbauerError as exc:
        print(f"{exc.name}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
