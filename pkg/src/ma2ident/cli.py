"""
Command-line front end.

    ma2ident acf THETA1 THETA2 SIGMA2
    ma2ident identify GAMMA0 GAMMA1 GAMMA2 | --input FILE
    ma2ident enumerate GAMMA0 GAMMA1 GAMMA2
    ma2ident classify THETA1 THETA2
    ma2ident simulate THETA1 THETA2 SIGMA2 N SEED [--then-identify]

Every command takes ``--format {json,csv,human}`` (default json).  Exit
status: 0 success, 2 invalid input, 3 every row failed.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from typing import Iterable, Iterator, Optional

from . import __version__
from .classify import classify_region, simplified_rule
from .core import (
    AcfTriple,
    Invertibility,
    Ma2Params,
    acf_from_params,
    invertibility,
)
from .errors import DomainError, Ma2Error, Unclassifiable
from .ident import identify_invertible
from .sim import SimConfig, sample_acf, simulate_path
from .versions import versions_from_acf

EXIT_OK = 0
EXIT_INVALID = 2
EXIT_ALL_FAILED = 3

IDENTIFY_COLUMNS = [
    "gamma0", "gamma1", "gamma2", "ok", "error", "message",
    "theta1", "theta2", "sigma2",
    "G", "z_minus", "z_plus", "h_minus", "h_plus",
    "x1", "x2", "x3", "x4", "residual",
]
ACF_COLUMNS = [
    "theta1", "theta2", "sigma2", "gamma0", "gamma1", "gamma2",
    "status", "boundary", "boundary_lam", "case", "correct_sigma",
]
ENUMERATE_COLUMNS = [
    "gamma0", "gamma1", "gamma2", "ok", "error", "message", "index",
    "theta1", "theta2", "sigma2", "flip_pattern", "invertible",
]
CLASSIFY_COLUMNS = [
    "theta1", "theta2", "case", "a", "b", "c", "d", "correct_sigma", "simplified_rule",
]
SIMULATE_COLUMNS = [
    "theta1", "theta2", "sigma2", "n", "seed",
    "gamma0_hat", "gamma1_hat", "gamma2_hat",
    "ok", "error", "message", "theta1_hat", "theta2_hat", "sigma2_hat",
]


class InputError(DomainError):
    pass


# -- formatting ---------------------------------------------------------------

def _json_value(v) -> str:
    if isinstance(v, bool) or v is None or isinstance(v, str):
        return json.dumps(v)
    if isinstance(v, float):
        return "%.17g" % v if math.isfinite(v) else "null"
    if isinstance(v, int):
        return str(v)
    if isinstance(v, dict):
        return "{" + ", ".join(f"{json.dumps(k)}: {_json_value(x)}" for k, x in v.items()) + "}"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_json_value(x) for x in v) + "]"
    raise TypeError(f"cannot serialize {type(v).__name__}")


def _human_value(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, float):
        return "%.6g" % v
    return str(v)


def _csv_value(v) -> str:
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return "%.17g" % v
    return str(v)


class Writer:
    def __init__(self, fmt: str, columns: list[str], out=None):
        self.fmt = fmt
        self.columns = columns
        self.out = out if out is not None else sys.stdout
        self._csv = None

    def write(self, record: dict) -> None:
        if self.fmt == "json":
            self.out.write(_json_value(record) + "\n")
        elif self.fmt == "csv":
            if self._csv is None:
                self._csv = csv.writer(self.out, lineterminator="\n")
                self._csv.writerow(self.columns)
            self._csv.writerow([_csv_value(record.get(c)) for c in self.columns])
        else:
            self.out.write(self._human(record) + "\n")

    def _human(self, record: dict, indent: str = "") -> str:
        lines = []
        for k, v in record.items():
            if isinstance(v, list):
                lines.append(f"{indent}{k}:")
                for i, item in enumerate(v):
                    lines.append(f"{indent}  [{i}]")
                    lines.append(self._human(item, indent + "    "))
            elif isinstance(v, dict):
                lines.append(f"{indent}{k}:")
                lines.append(self._human(v, indent + "  "))
            else:
                lines.append(f"{indent}{k}: {_human_value(v)}")
        return "\n".join(lines)


def _error_record(exc: Exception) -> dict:
    return {"ok": False, "error": type(exc).__name__, "message": str(exc)}


def _is_invalid(exc: Exception) -> bool:
    return isinstance(exc, DomainError)


def _finish(failures: list[Exception], rows: int) -> int:
    if rows == 0:
        return EXIT_INVALID
    if len(failures) < rows:
        return EXIT_OK
    if all(_is_invalid(e) for e in failures):
        return EXIT_INVALID
    return EXIT_ALL_FAILED


def _report_error(exc: Exception) -> None:
    print(f"ma2ident: {type(exc).__name__}: {exc}", file=sys.stderr)


# -- input --------------------------------------------------------------------

def read_triples(lines: Iterable[str]) -> Iterator[tuple[int, object]]:
    """Yield (line number, AcfTriple or InputError) from CSV text.

    Blank lines and lines starting with '#' are skipped; an optional header
    row ``gamma0,gamma1,gamma2`` is ignored.
    """
    for lineno, line in enumerate(lines, start=1):
        text = line.strip()
        if not text or text.startswith("#"):
            continue
        fields = [f.strip() for f in next(csv.reader([text]))]
        if [f.lower() for f in fields] == ["gamma0", "gamma1", "gamma2"]:
            continue
        if len(fields) != 3:
            yield lineno, InputError(f"line {lineno}: expected 3 fields, got {len(fields)}")
            continue
        try:
            yield lineno, AcfTriple(*(float(f) for f in fields))
        except ValueError:
            yield lineno, InputError(f"line {lineno}: non-numeric field in {text!r}")


def _open_input(path: str):
    if path == "-":
        return io.TextIOWrapper(sys.stdin.buffer, encoding="utf-8")
    return open(path, encoding="utf-8")


# -- records ------------------------------------------------------------------

def _acf_fields(a: AcfTriple) -> dict:
    return {"gamma0": a.gamma0, "gamma1": a.gamma1, "gamma2": a.gamma2}


def identify_record(a: AcfTriple) -> dict:
    rec = _acf_fields(a)
    res = identify_invertible(a)
    p, c = res.invertible_params, res.candidates
    rec.update(ok=True, theta1=p.theta1, theta2=p.theta2, sigma2=p.sigma2,
               G=c.G, z_minus=c.z_minus, z_plus=c.z_plus,
               h_minus=c.h_minus, h_plus=c.h_plus,
               x1=c.x1, x2=c.x2, x3=c.x3, x4=c.x4, residual=res.residual)
    return rec


def acf_record(p: Ma2Params) -> dict:
    a = acf_from_params(p)
    inv = invertibility(p)
    region = classify_region(p.theta1, p.theta2)
    rec = {"theta1": p.theta1, "theta2": p.theta2, "sigma2": p.sigma2}
    rec.update(_acf_fields(a))
    rec.update(
        status=inv.status.value,
        boundary=inv.tag.label if inv.tag else None,
        boundary_lam=inv.tag.lam if inv.tag else None,
        case=region.case_id,
        correct_sigma=region.correct_sigma.value if region.correct_sigma else None,
    )
    return rec


def classify_record(theta1: float, theta2: float) -> dict:
    r = classify_region(theta1, theta2)
    try:
        rule = simplified_rule(theta1, theta2).value
    except Unclassifiable:
        rule = None
    return {
        "theta1": theta1, "theta2": theta2, "case": r.case_id,
        "a": r.a_holds.value, "b": r.b_holds.value,
        "c": r.c_holds.value, "d": r.d_holds.value,
        "correct_sigma": r.correct_sigma.value if r.correct_sigma else None,
        "simplified_rule": rule,
    }


def enumerate_record(a: AcfTriple) -> dict:
    vs = versions_from_acf(a)
    rec = _acf_fields(a)
    rec["ok"] = True
    rec["count"] = len(vs)
    rec["versions"] = [
        {"theta1": v.params.theta1, "theta2": v.params.theta2,
         "sigma2": v.params.sigma2, "flip_pattern": v.flip_label,
         "invertible": v.invertible}
        for v in vs
    ]
    return rec


# -- commands -----------------------------------------------------------------

def cmd_acf(args) -> int:
    w = Writer(args.format, ACF_COLUMNS)
    try:
        rec = acf_record(Ma2Params(args.theta1, args.theta2, args.sigma2))
    except Ma2Error as exc:
        _report_error(exc)
        w.write(_error_record(exc))
        return EXIT_INVALID
    if rec["status"] == Invertibility.BOUNDARY.value:
        print(f"ma2ident: warning: unit-modulus root, boundary ({rec['boundary']})",
              file=sys.stderr)
    w.write(rec)
    return EXIT_OK


def _batch(args, fn, columns, flatten=None) -> int:
    w = Writer(args.format, columns)
    if args.input is not None:
        if args.gamma:
            _report_error(InputError("give either GAMMA0 GAMMA1 GAMMA2 or --input, not both"))
            return EXIT_INVALID
        try:
            fh = _open_input(args.input)
        except OSError as exc:
            _report_error(exc)
            return EXIT_INVALID
        with fh:
            items = list(read_triples(fh))
    elif len(args.gamma) == 3:
        items = [(0, AcfTriple(*args.gamma))]
    else:
        _report_error(InputError("expected GAMMA0 GAMMA1 GAMMA2 or --input FILE"))
        return EXIT_INVALID

    failures = []
    for _, item in items:
        try:
            if isinstance(item, Exception):
                raise item
            rec = fn(item)
        except Ma2Error as exc:
            failures.append(exc)
            rec = _error_record(exc)
            if isinstance(item, AcfTriple):
                rec = {**_acf_fields(item), **rec}
            if args.input is None:
                _report_error(exc)
        for r in (flatten(rec) if flatten else [rec]):
            w.write(r)
    return _finish(failures, len(items))


def _flatten_versions(rec: dict) -> list[dict]:
    if not rec.get("ok"):
        return [rec]
    base = {k: rec[k] for k in ("gamma0", "gamma1", "gamma2", "ok")}
    return [{**base, "index": i, **v} for i, v in enumerate(rec["versions"])]


def cmd_identify(args) -> int:
    return _batch(args, identify_record, IDENTIFY_COLUMNS)


def cmd_enumerate(args) -> int:
    flatten = _flatten_versions if args.format == "csv" else None
    return _batch(args, enumerate_record, ENUMERATE_COLUMNS, flatten)


def cmd_classify(args) -> int:
    w = Writer(args.format, CLASSIFY_COLUMNS)
    try:
        rec = classify_record(args.theta1, args.theta2)
    except Ma2Error as exc:
        _report_error(exc)
        w.write(_error_record(exc))
        return EXIT_INVALID
    w.write(rec)
    return EXIT_OK


def cmd_simulate(args) -> int:
    w = Writer(args.format, SIMULATE_COLUMNS)
    try:
        cfg = SimConfig(Ma2Params(args.theta1, args.theta2, args.sigma2), args.n, args.seed)
        est = sample_acf(simulate_path(cfg))
    except Ma2Error as exc:
        _report_error(exc)
        w.write(_error_record(exc))
        return EXIT_INVALID
    g = est.gamma_hat
    rec = {"theta1": args.theta1, "theta2": args.theta2, "sigma2": args.sigma2,
           "n": args.n, "seed": args.seed,
           "gamma0_hat": g.gamma0, "gamma1_hat": g.gamma1, "gamma2_hat": g.gamma2}
    code = EXIT_OK
    if args.then_identify:
        try:
            p = identify_invertible(g).invertible_params
            rec.update(ok=True, theta1_hat=p.theta1, theta2_hat=p.theta2, sigma2_hat=p.sigma2)
        except Ma2Error as exc:
            _report_error(exc)
            rec.update(_error_record(exc))
            code = EXIT_ALL_FAILED
    w.write(rec)
    return code


# -- parser -------------------------------------------------------------------

def _seed(text: str) -> int:
    v = int(text)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must be a 64-bit unsigned integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ma2ident",
        description="Identify MA(2) processes from their autocovariances.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("json", "csv", "human"), default="json",
                     help="output format (default: json)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("acf", parents=[fmt], help="autocovariances of (theta1, theta2, sigma2)")
    p.add_argument("theta1", type=float)
    p.add_argument("theta2", type=float)
    p.add_argument("sigma2", type=float)
    p.set_defaults(func=cmd_acf)

    for name, func, help_ in (
        ("identify", cmd_identify, "invertible MA(2) with given autocovariances"),
        ("enumerate", cmd_enumerate, "every MA(2) with given autocovariances"),
    ):
        p = sub.add_parser(name, parents=[fmt], help=help_)
        p.add_argument("gamma", type=float, nargs="*", metavar="GAMMA",
                       help="gamma0 gamma1 gamma2")
        p.add_argument("--input", "-i", metavar="FILE",
                       help="CSV file of gamma0,gamma1,gamma2 rows ('-' for stdin)")
        p.set_defaults(func=func)

    p = sub.add_parser("classify", parents=[fmt], help="region case of (theta1, theta2)")
    p.add_argument("theta1", type=float)
    p.add_argument("theta2", type=float)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("simulate", parents=[fmt], help="simulate a path and estimate its ACF")
    p.add_argument("theta1", type=float)
    p.add_argument("theta2", type=float)
    p.add_argument("sigma2", type=float)
    p.add_argument("n", type=int)
    p.add_argument("seed", type=_seed)
    p.add_argument("--then-identify", action="store_true",
                   help="also identify the invertible process from the sample ACF")
    p.set_defaults(func=cmd_simulate)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INVALID if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
