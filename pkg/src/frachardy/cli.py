"""Command-line front end: constants, measures, searches, verification and sweeps.

Exit codes: 0 success, 1 a verification check failed, 2 invalid input.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Optional, Sequence

from . import constants as K
from .fracmeasures import perimeter_interval_union, perimeter_oracle, weighted_volume, weighted_volume_ball
from .sets1d import Bounded, IntervalUnion, parse_domain
from .specfun import DomainError, QuadratureError
from .variational import MinimizeConfig, cheeger_quotient, cheeger_search, minimize_rayleigh
from .verify import SUITES, VerifyConfig, run_all

__all__ = ["build_parser", "parse_and_dispatch", "sweep", "main"]

COMMANDS = ("constants", "perimeter", "volume", "quotient", "cheeger", "minimize", "verify", "sweep")

CONSTANTS = {
    "unit_ball_volume": (("N",), lambda a: K.unit_ball_volume(a.N)),
    "c_constant": (("N", "q"), lambda a: K.c_constant(a.N, a.q)),
    "c_constant_quadrature": (("N", "q"), lambda a: K.c_constant_quadrature(a.N, a.q)),
    "lambda": (("s", "p"), lambda a: K.lambda_constant(a.s, a.p)),
    "sharp_halfspace": (("N", "s", "p"), lambda a: K.sharp_halfspace(a.N, a.s, a.p)),
    "sharp_punctured": (("N", "s"), lambda a: K.sharp_punctured(a.N, a.s)),
    "perimeter_ball": (("N", "s"), lambda a: K.perimeter_ball_closed(a.N, a.s)),
    "ball_ratio_bound": (("N", "s"), lambda a: K.ball_ratio_bound(a.N, a.s)),
    "classical": (("p",), lambda a: K.classical_constant(a.p)),
    "weighted_volume_ball": (("N", "s"), lambda a: weighted_volume_ball(a.N, a.s)),
}


class InputError(Exception):
    """Invalid command-line input; the message names the offending token."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="frachardy", description="Sharp constants of fractional Hardy inequalities.")
    ap.add_argument("command", help=f"one of: {', '.join(COMMANDS)}")
    ap.add_argument("--domain", help="interval(a,b) | union[(a1,b1),...] | halfline | punctured | punctured_box(R)")
    ap.add_argument("--set", dest="set_", metavar="SET",
                    help="candidate set E, or the computational window for minimize (same grammar)")
    ap.add_argument("-s", type=float)
    ap.add_argument("-p", type=float)
    ap.add_argument("-N", type=int)
    ap.add_argument("-q", type=float)
    ap.add_argument("--what", help="quantity to compute (constants, perimeter method, sweep quantity)")
    ap.add_argument("--suite", default="all", help=f"verification suite: all, {', '.join(SUITES)}")
    ap.add_argument("--grid-n", type=int, default=64)
    ap.add_argument("--k", type=int)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--tol", type=float)
    ap.add_argument("--ladder", help="sweep ladder: name=v1,v2,... or name=start:ratio:count")
    ap.add_argument("--output", choices=("table", "csv", "jsonl"), default="table")
    ap.add_argument("--out", help="write results to PATH instead of standard output")
    return ap


def _fmt(x: float) -> str:
    return "%.17g" % x


def _require(args, names, command):
    missing = [n for n in names if getattr(args, n) is None]
    if missing:
        flags = ", ".join(("-" + n) if len(n) == 1 else "--" + n.replace("_", "-") for n in missing)
        raise InputError(f"{command} needs {flags}")


def _union(text: str) -> IntervalUnion:
    dom = parse_domain(text)
    if not isinstance(dom, Bounded):
        raise InputError(f"expected a bounded set, got {text!r}")
    return dom.union


def _param_string(args, names, domain=None, set_=None) -> str:
    parts = []
    if domain is not None:
        parts.append(f"domain={domain}")
    if set_ is not None:
        parts.append(f"set={set_}")
    for n in names:
        v = getattr(args, n)
        parts.append(f"{n}={_fmt(v) if isinstance(v, float) else v}")
    return ";".join(parts)


class Rows:
    """Result rows with the fixed CSV header param,value,err_estimate,method."""

    def __init__(self):
        self.rows = []

    def add(self, param, value, err=0.0, method="closed_form", **extra):
        self.rows.append(dict(param=param, value=float(value), err_estimate=float(err), method=method, **extra))

    def render(self, fmt: str) -> str:
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            w.writerow(["param", "value", "err_estimate", "method"])
            for r in self.rows:
                w.writerow([r["param"], _fmt(r["value"]), _fmt(r["err_estimate"]), r["method"]])
            return buf.getvalue()
        if fmt == "jsonl":
            return "".join(json.dumps(r) + "\n" for r in self.rows)
        lines = []
        for r in self.rows:
            extra = "".join(f"  {k}={v}" for k, v in r.items()
                            if k not in ("param", "value", "err_estimate", "method"))
            lines.append(f"{r['param']}\t{_fmt(r['value'])}{extra}")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------- commands

def _constant_method(args) -> str:
    if args.what == "c_constant_quadrature" or (args.what == "lambda" and args.p != 1.0):
        return "quadrature"
    return "closed_form"


def _cmd_constants(args, rows):
    if args.what is None:
        raise InputError(f"constants needs --what (one of {', '.join(CONSTANTS)})")
    if args.what not in CONSTANTS:
        raise InputError(f"unknown constant {args.what!r}")
    names, fn = CONSTANTS[args.what]
    _require(args, names, f"constants --what {args.what}")
    rows.add(f"what={args.what};" + _param_string(args, names), fn(args), method=_constant_method(args))


def _cmd_perimeter(args, rows):
    _require(args, ("s",), "perimeter")
    text = args.set_ or args.domain
    if text is None:
        raise InputError("perimeter needs --set or a bounded --domain")
    E = _union(text)
    method = args.what or "closed_form"
    if method == "closed_form":
        r = perimeter_interval_union(E, args.s)
    elif method == "quadrature":
        r = perimeter_oracle(E, args.s, tol=args.tol or 1e-10)
    else:
        raise InputError(f"unknown perimeter method {method!r}")
    rows.add(_param_string(args, ("s",), set_=str(E)), r.value, r.err_estimate, r.method.value)


def _cmd_volume(args, rows):
    _require(args, ("domain",), "volume")
    q = args.q if args.q is not None else args.s
    if q is None:
        raise InputError("volume needs -q (or -s)")
    omega = parse_domain(args.domain)
    E = _union(args.set_) if args.set_ else _union(args.domain)
    r = weighted_volume(omega, E, q)
    rows.add(f"domain={omega};set={E};q={_fmt(q)}", r.value, r.err_estimate, r.method.value)


def _cmd_quotient(args, rows):
    _require(args, ("domain", "s"), "quotient")
    omega = parse_domain(args.domain)
    E = _union(args.set_) if args.set_ else _union(args.domain)
    rows.add(_param_string(args, ("s",), domain=omega, set_=E), cheeger_quotient(omega, E, args.s))


def _config(args) -> MinimizeConfig:
    kw = {"seed": args.seed}
    if args.tol is not None:
        kw["tol"] = args.tol
    return MinimizeConfig(**kw)


def _cmd_cheeger(args, rows):
    _require(args, ("domain", "s"), "cheeger")
    omega = parse_domain(args.domain)
    r = cheeger_search(omega, args.s, k=args.k, cfg=_config(args))
    rows.add(_param_string(args, ("s",), domain=omega), r.quotient, 0.0, "cheeger_search",
             best_set=str(r.best_set), evaluations=r.evaluations)


def _cmd_minimize(args, rows):
    _require(args, ("domain", "s", "p"), "minimize")
    omega = parse_domain(args.domain)
    window = _union(args.set_) if args.set_ else None
    r = minimize_rayleigh(omega, args.s, args.p, args.grid_n, _config(args), window=window)
    rows.add(_param_string(args, ("s", "p", "grid_n", "seed"), domain=omega, set_=window),
             r.quotient, 0.0, "projected_descent", iterations=len(r.trace))


# quantities that can be swept: name -> (required params, evaluator returning (value, err, method))
def _q_perimeter(a):
    r = perimeter_interval_union(_union(a.set_ or a.domain), a.s)
    return r.value, r.err_estimate, r.method.value


def _q_davila(a):
    v, e, m = _q_perimeter(a)
    return (1.0 - a.s) * v, e, m


def _q_mazya(a):
    v, e, m = _q_perimeter(a)
    return a.s * v, e, m


def _q_quotient(a):
    omega = parse_domain(a.domain)
    E = _union(a.set_) if a.set_ else _union(a.domain)
    return cheeger_quotient(omega, E, a.s), 0.0, "closed_form"


SWEEPABLE = {
    "perimeter": (("s",), _q_perimeter),
    "davila": (("s",), _q_davila),
    "mazya": (("s",), _q_mazya),
    "quotient": (("s", "domain"), _q_quotient),
}
for _name, (_names, _fn) in CONSTANTS.items():
    SWEEPABLE[_name] = (_names, lambda a, _fn=_fn: (_fn(a), 0.0, _constant_method(a)))


def parse_ladder(spec: str):
    """'s=0.9,0.99' or 's=0.5:0.5:5' (start:ratio:count) -> (name, values)."""
    if "=" not in spec:
        raise InputError(f"malformed ladder {spec!r}; expected name=values")
    name, body = spec.split("=", 1)
    name = name.strip()
    if name not in ("s", "p", "q", "N"):
        raise InputError(f"ladder parameter must be s, p, q or N, got {name!r}")
    try:
        if ":" in body:
            start, ratio, count = body.split(":")
            vals = [float(start) * float(ratio) ** i for i in range(int(count))]
        else:
            vals = [float(v) for v in body.split(",") if v.strip()]
    except ValueError:
        raise InputError(f"malformed ladder values {body!r}") from None
    if not vals:
        raise InputError("empty ladder")
    if name == "N":
        vals = [int(v) for v in vals]
    return name, vals


def sweep(args, rows=None) -> Rows:
    """Evaluate one quantity along a parameter ladder, in ladder order."""
    rows = rows or Rows()
    if args.what not in SWEEPABLE:
        raise InputError(f"sweep needs --what from: {', '.join(sorted(SWEEPABLE))}")
    if args.ladder is None:
        raise InputError("sweep needs --ladder")
    name, vals = parse_ladder(args.ladder)
    names, fn = SWEEPABLE[args.what]
    for v in vals:
        setattr(args, name, v)
        _require(args, [n for n in names if n != "domain"], f"sweep --what {args.what}")
        if "domain" in names:
            _require(args, ("domain",), f"sweep --what {args.what}")
        value, err, method = fn(args)
        rest = [n for n in ("N", "s", "p", "q") if getattr(args, n) is not None]
        param = f"what={args.what};" + _param_string(args, rest, domain=args.domain, set_=args.set_)
        rows.add(param, value, err, method)
    return rows


def _emit(text: str, out: Optional[str]):
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def parse_and_dispatch(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        args = build_parser().parse_args(argv)
        if args.command not in COMMANDS:
            raise InputError(f"unknown command {args.command!r}; choose from {', '.join(COMMANDS)}")
        if args.command == "verify":
            try:
                report = run_all(VerifyConfig(suite=args.suite, seed=args.seed))
            except ValueError as exc:
                raise InputError(str(exc)) from None
            if args.output == "jsonl":
                text = report.to_jsonl()
            elif args.output == "csv":
                buf = io.StringIO()
                w = csv.writer(buf, lineterminator="\n")
                w.writerow(["param", "value", "err_estimate", "method"])
                for c in report.checks:
                    w.writerow([f"id={c.id}", _fmt(c.lhs), _fmt(abs(c.lhs - c.rhs)),
                                f"{c.relation.value}:{c.status.value}"])
                text = buf.getvalue()
            else:
                text = report.to_table()
            _emit(text, args.out)
            return 0 if report.ok else 1
        rows = Rows()
        handler = {
            "constants": _cmd_constants,
            "perimeter": _cmd_perimeter,
            "volume": _cmd_volume,
            "quotient": _cmd_quotient,
            "cheeger": _cmd_cheeger,
            "minimize": _cmd_minimize,
            "sweep": sweep,
        }[args.command]
        handler(args, rows)
        _emit(rows.render(args.output), args.out)
        return 0
    except (InputError, DomainError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    except (QuadratureError, RuntimeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


def main() -> None:
    sys.exit(parse_and_dispatch())
