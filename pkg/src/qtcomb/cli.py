"""Command-line front end.

    qtcomb compute --kind catalan --lambda 1,1,1 --n 3 --q 1/2 --t 1/3 --route both
    qtcomb verify --suite w --max-weight 6 --max-n 4 --seed 0

Exit codes: 0 success / all identities hold, 1 verification failure or
unequal routes, 2 usage error, 3 singular evaluation point.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import dataclass, field

from qtcomb import numbers as nb
from qtcomb import tableau, wfun
from qtcomb.arith import DenominatorVanishes, QTPoint, format_rational, parse_rational
from qtcomb.partition import Partition
from qtcomb.verify import SUITES, run_verify

KINDS = ("w", "W", "binom", "bracket", "catalan", "lah", "psi")
ROUTES = ("algebraic", "combinatorial", "both")
FORMATS = ("plain", "json", "csv")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SINGULAR = 0, 1, 2, 3


class UsageError(Exception):
    pass


@dataclass
class EvalRequest:
    kind: str
    lam: Partition | None = None
    mu: Partition | None = None
    n: int | None = None
    z: tuple | None = None
    s: tuple | None = None
    a: object = None
    b: object = None
    q: object = None
    t: object = None
    route: str = "algebraic"

    def echo(self) -> dict:
        def vec(v):
            return None if v is None else [format_rational(x) for x in v]

        out = {
            "kind": self.kind,
            "lambda": None if self.lam is None else str(self.lam),
            "mu": None if self.mu is None else str(self.mu),
            "n": self.n,
            "z": vec(self.z),
            "s": vec(self.s),
            "q": format_rational(self.q),
            "t": format_rational(self.t),
            "route": self.route,
        }
        if self.kind == "W":
            out["a"] = format_rational(self.a)
            out["b"] = format_rational(self.b)
        return out


@dataclass
class EvalResult:
    request: EvalRequest
    values: dict = field(default_factory=dict)
    equal: bool | None = None
    elapsed_ms: float | None = None

    def to_dict(self, timing: bool = False) -> dict:
        out = {"request": self.request.echo(),
               "values": {k: format_rational(v) for k, v in self.values.items()}}
        if self.equal is not None:
            out["equal"] = self.equal
        if timing and self.elapsed_ms is not None:
            out["elapsed_ms"] = round(self.elapsed_ms, 3)
        return out


def _require(req: EvalRequest, *names):
    missing = [n for n in names if getattr(req, n) is None]
    if missing:
        flags = ", ".join("--lambda" if m == "lam" else f"--{m}" for m in missing)
        raise UsageError(f"kind={req.kind} requires {flags}")


def _int_vector(req: EvalRequest):
    z = req.z
    if any(v.denominator != 1 for v in z):
        raise UsageError(f"kind={req.kind} needs an integer exponent vector --z")
    if len(z) != req.n:
        raise UsageError(f"--z must have n={req.n} entries")
    return tuple(int(v) for v in z)


def _routes(req: EvalRequest, algebraic, combinatorial):
    values = {}
    if req.route in ("algebraic", "both"):
        values["algebraic"] = algebraic()
    if req.route in ("combinatorial", "both"):
        if combinatorial is None:
            raise UsageError(f"kind={req.kind} has no combinatorial route for these inputs")
        values["combinatorial"] = combinatorial()
    return values


def run_compute(req: EvalRequest) -> EvalResult:
    if req.kind not in KINDS:
        raise UsageError(f"unknown kind {req.kind!r}")
    if req.route not in ROUTES:
        raise UsageError(f"unknown route {req.route!r}")
    _require(req, "q", "t")
    try:
        pt = QTPoint(req.q, req.t)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    kind = req.kind
    mu = req.mu if req.mu is not None else Partition(())
    start = time.perf_counter()

    if kind == "w":
        _require(req, "lam", "z")
        z = req.z
        if req.n is not None and req.n != len(z):
            raise UsageError("--n must equal the number of variables in --z")
        comb = None
        if len(z) == 1:
            comb = lambda: wfun.w_single_comb(z[0], req.lam, mu, pt)  # noqa: E731
        elif not mu:
            comb = lambda: wfun.w_multi_tableau(z, req.lam, pt)  # noqa: E731
        values = _routes(req, lambda: wfun.w_multi_branch(z, req.lam, mu, pt), comb)
    elif kind == "W":
        _require(req, "lam", "z", "a", "b")
        params = wfun.WParams(pt, req.a, req.b)
        n = req.n if req.n is not None else len(req.z)
        values = _routes(req, lambda: wfun.W_multi(req.z, req.lam, mu, params, n), None)
    elif kind == "psi":
        _require(req, "lam", "mu")
        if not tableau.is_horizontal_strip(req.lam, mu):
            raise UsageError(f"{req.lam}/{mu} is not a horizontal strip")
        values = _routes(req, lambda: tableau.psi_strip_algebraic(req.lam, mu, pt),
                         lambda: tableau.psi_strip(req.lam, mu, pt))
    elif kind in ("binom", "bracket"):
        part = req.mu if req.mu is not None else req.lam
        if part is None:
            raise UsageError(f"kind={kind} requires --mu")
        _require(req, "n", "z")
        z = _int_vector(req)
        if kind == "binom":
            values = _routes(req, lambda: nb.binom(z, part, req.n, pt),
                             lambda: nb.binom_comb(z, part, req.n, pt))
        else:
            s = req.s
            if s is not None and len(s) != req.n:
                raise UsageError(f"--s must have n={req.n} entries")
            values = _routes(req, lambda: nb.bracket(z, s, part, req.n, pt),
                             lambda: nb.bracket_comb(z, s, part, req.n, pt))
    elif kind == "catalan":
        _require(req, "lam", "n")
        if len(req.lam) != req.n:
            raise UsageError("Catalan numbers need len(lambda) == n")
        values = _routes(req, lambda: nb.catalan(req.lam, req.n, pt),
                         lambda: nb.catalan_comb(req.lam, req.n, pt))
    else:  # lah
        _require(req, "lam", "mu", "n")
        if len(req.lam) > req.n:
            raise UsageError("len(lambda) must not exceed n")
        values = _routes(req, lambda: nb.lah_explicit(req.lam, mu, req.n, pt),
                         lambda: nb.lah_comb(req.lam, mu, req.n, pt))

    result = EvalResult(req, values, elapsed_ms=(time.perf_counter() - start) * 1000)
    if req.route == "both":
        result.equal = values["algebraic"] == values["combinatorial"]
    return result


def _parse_vector(text):
    if text is None:
        return None
    text = text.strip()
    if not text:
        return ()
    return tuple(parse_rational(p) for p in text.split(","))


def _build_request(args) -> EvalRequest:
    try:
        return EvalRequest(
            kind=args.kind,
            lam=None if args.lam is None else Partition.parse(args.lam),
            mu=None if args.mu is None else Partition.parse(args.mu),
            n=args.n,
            z=_parse_vector(args.z),
            s=_parse_vector(args.s),
            a=None if args.a is None else parse_rational(args.a),
            b=None if args.b is None else parse_rational(args.b),
            q=None if args.q is None else parse_rational(args.q),
            t=None if args.t is None else parse_rational(args.t),
            route=args.route,
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _render_result(result: EvalResult, fmt: str, timing: bool) -> str:
    data = result.to_dict(timing)
    if fmt == "json":
        return json.dumps(data, sort_keys=True)
    if fmt == "csv":
        buf = io.StringIO()
        row = {f"request.{k}": ("" if v is None else v if not isinstance(v, list) else ",".join(v))
               for k, v in data["request"].items()}
        row.update({f"value.{k}": v for k, v in data["values"].items()})
        if "equal" in data:
            row["equal"] = str(data["equal"]).lower()
        if "elapsed_ms" in data:
            row["elapsed_ms"] = data["elapsed_ms"]
        writer = csv.DictWriter(buf, fieldnames=list(row), lineterminator="\n")
        writer.writeheader()
        writer.writerow(row)
        return buf.getvalue().rstrip("\n")
    lines = []
    req = data["request"]
    shown = {k: ",".join(v) if isinstance(v, list) else v for k, v in req.items()}
    lines.append("request: " + " ".join(f"{k}={v}" for k, v in shown.items() if v is not None))
    for k, v in data["values"].items():
        lines.append(f"{k}: {v}")
    if "equal" in data:
        lines.append(f"equal: {str(data['equal']).lower()}")
    if "elapsed_ms" in data:
        lines.append(f"elapsed_ms: {data['elapsed_ms']}")
    return "\n".join(lines)


def _error(fmt: str, kind: str, message: str, **extra) -> str:
    if fmt == "json":
        return json.dumps({"error": kind, "message": message, **extra}, sort_keys=True)
    tail = "".join(f" {k}={v}" for k, v in extra.items())
    return f"error: {kind}: {message}{tail}"


def cmd_compute(args) -> int:
    try:
        req = _build_request(args)
        result = run_compute(req)
    except UsageError as exc:
        print(_error(args.format, "usage", str(exc)), file=sys.stderr)
        return EXIT_USAGE
    except DenominatorVanishes as exc:
        print(_error(args.format, "denominator_vanishes", str(exc),
                     signature=list(exc.signature)), file=sys.stderr)
        return EXIT_SINGULAR
    except (ValueError, tableau.NotAStrip) as exc:
        print(_error(args.format, "usage", str(exc)), file=sys.stderr)
        return EXIT_USAGE
    print(_render_result(result, args.format, args.timing))
    if result.equal is False:
        return EXIT_FAIL
    return EXIT_OK


def cmd_verify(args) -> int:
    if args.max_weight < 0 or args.max_n < 1 or args.trials < 1:
        print(_error(args.format, "usage", "need max-weight >= 0, max-n >= 1, trials >= 1"),
              file=sys.stderr)
        return EXIT_USAGE
    report = run_verify(args.suite, args.max_weight, args.max_n, args.trials, args.seed)
    if args.format == "json":
        payload = {
            "suite": args.suite, "max_weight": args.max_weight, "max_n": args.max_n,
            "trials": args.trials, "seed": args.seed, "ok": report.ok,
            "checks": [
                {"name": r.name, "passed": r.passed, "failed": r.failed, "skipped": r.skipped,
                 "first_failure": r.first_failure}
                for r in sorted(report.results.values(), key=lambda r: r.name)
            ],
        }
        print(json.dumps(payload, sort_keys=True))
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["name", "passed", "failed", "skipped", "first_failure"])
        for r in sorted(report.results.values(), key=lambda r: r.name):
            writer.writerow([r.name, r.passed, r.failed, r.skipped, r.first_failure or ""])
        print(buf.getvalue().rstrip("\n"))
    else:
        for line in report.lines():
            print(line)
        print("ALL PASS" if report.ok else "FAILURES")
    return EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="qtcomb", description=__doc__.split("\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)

    c = sub.add_parser("compute", help="evaluate one quantity exactly")
    c.add_argument("--kind", required=True, choices=KINDS)
    c.add_argument("--lambda", dest="lam", help="partition, e.g. 3,1")
    c.add_argument("--mu", help="partition, e.g. 2 (empty string for the empty partition)")
    c.add_argument("--n", type=int)
    c.add_argument("--z", help="comma-separated: variables for w/W, integer exponents for binom/bracket")
    c.add_argument("--s", help="comma-separated scale vector for bracket (default all ones)")
    c.add_argument("--a", help="W parameter a")
    c.add_argument("--b", help="W parameter b")
    c.add_argument("--q", required=True)
    c.add_argument("--t", required=True)
    c.add_argument("--route", choices=ROUTES, default="algebraic")
    c.add_argument("--format", choices=FORMATS, default="plain")
    c.add_argument("--timing", action="store_true", help="include wall-clock milliseconds")
    c.set_defaults(func=cmd_compute)

    v = sub.add_parser("verify", help="run identity suites on a partition grid")
    v.add_argument("--suite", choices=SUITES, default="all")
    v.add_argument("--max-weight", type=int, default=6)
    v.add_argument("--max-n", type=int, default=4)
    v.add_argument("--trials", type=int, default=3)
    v.add_argument("--seed", type=int, default=0)
    v.add_argument("--format", choices=FORMATS, default="plain")
    v.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
