"""Command-line front end: ``mm <subcommand> ...``.

Exit codes: 0 when every check passes, 1 when a check fails (the report is
still written), 2 for usage or validation errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import itertools
import json
import sys
from fractions import Fraction

from . import fock, genfun, meixner, moments
from .algebra import format_rational, parse_rational
from .meixner import Params
from .report import summarize

DEFAULT_PARAMS = (
    Params(1, Fraction(1), (Fraction(1, 2),)),
    Params(2, Fraction(3, 2), (Fraction(1, 3), Fraction(1, 2))),
    Params(3, Fraction(2), (Fraction(1, 5), Fraction(1, 3), Fraction(1, 2))),
)
DEFAULT_XS = (Fraction(0), Fraction(2), Fraction(7, 2))
DEFAULT_BETA_SAMPLES = (Fraction(1), Fraction(3, 2), Fraction(2), Fraction(5, 2), Fraction(3))

RELATIONS = (
    "recurrence-path", "pairwise", "non-nearest", "backward1", "forward1", "backward2",
    "step2", "raising", "lowering", "diffeq-x", "diffeq-beta", "orthogonality", "genfun",
    "fock-eigen", "fock-commutator", "fock-weak", "fock-shift", "fock-conjugation", "su11",
)


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _int_list(text: str) -> tuple:
    try:
        values = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}")
    return values


def _add_params(p: argparse.ArgumentParser) -> None:
    p.add_argument("--r", type=int)
    p.add_argument("--beta")
    p.add_argument("--c")
    p.add_argument("--params-file")


def load_params_file(path: str) -> Params:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read params file {path}: {exc}")
    if not isinstance(data, dict) or set(data) - {"r", "beta", "c"} or not {"r", "beta", "c"} <= set(data):
        raise UsageError('params file must be {"r": int, "beta": "p/q", "c": ["p/q", ...]}')
    if not isinstance(data["r"], int) or not isinstance(data["c"], list):
        raise UsageError("params file: r must be an integer and c a list")
    return _make_params(data["r"], str(data["beta"]), [str(v) for v in data["c"]])


def _make_params(r, beta, c) -> Params:
    try:
        return Params.parse(r, beta, c)
    except ValueError as exc:
        raise UsageError(str(exc))


def _params(args, required: bool = True):
    flags = [args.r, args.beta, args.c]
    if args.params_file and any(v is not None for v in flags):
        raise UsageError("give parameters either as flags or as --params-file, not both")
    if args.params_file:
        return load_params_file(args.params_file)
    if all(v is None for v in flags):
        if required:
            raise UsageError("parameters required: --r, --beta, --c or --params-file")
        return None
    if any(v is None for v in flags):
        raise UsageError("--r, --beta and --c must be given together")
    return _make_params(args.r, args.beta, args.c.split(","))


def _multi_index(args, params: Params) -> tuple:
    if args.n is None:
        raise UsageError("--n is required")
    n = _int_list(args.n)
    if len(n) != params.r or any(v < 0 for v in n):
        raise UsageError(f"--n must list {params.r} non-negative integers")
    return n


def _rational(text: str, flag: str) -> Fraction:
    try:
        return parse_rational(text)
    except ValueError as exc:
        raise UsageError(f"{flag}: {exc}")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="mm", description="Multiple Meixner polynomials of the first kind.")
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    def common(p):
        _add_params(p)
        p.add_argument("--format", choices=("json", "csv"), default="json")
        p.add_argument("--out")
        return p

    p = common(sub.add_parser("poly", help="print M_n"))
    p.add_argument("--n")
    p = common(sub.add_parser("eval", help="evaluate M_n at x"))
    p.add_argument("--n")
    p.add_argument("--x")
    p = common(sub.add_parser("table", help="all M_n with |n| <= max degree"))
    p.add_argument("--max-degree", type=int, default=5)
    p = common(sub.add_parser("genfun", help="generating-function coefficients"))
    p.add_argument("--order", type=int, default=6)

    p = common(sub.add_parser("check", help="verify identities"))
    p.add_argument("relation", choices=RELATIONS + ("all",))
    p.add_argument("--max-degree", type=int, default=5)
    p.add_argument("--degree", type=int, default=8)
    p.add_argument("--order", type=int, default=6)
    p.add_argument("--ordering")
    p.add_argument("--x")
    p.add_argument("--literal", action="store_true",
                   help="check the printed forms of the commutator, shift, conjugation and "
                        "difference-equation identities instead of the corrected ones")

    p = sub.add_parser("fock", help="operator matrices")
    fsub = p.add_subparsers(dest="fock_command", parser_class=_Parser)
    d = common(fsub.add_parser("dump", help="dump an operator matrix as JSON"))
    d.add_argument("name")
    d.add_argument("--degree", type=int, default=8)

    p = common(sub.add_parser("spectrum", help="floating-point eigenvalues (diagnostic)"))
    p.add_argument("--degree", type=int, default=8)
    p.add_argument("--name", default="H_1")
    return parser


# -- check dispatch ----------------------------------------------------------------

def _ordering(args, params: Params):
    if not args.ordering:
        return None
    o = _int_list(args.ordering)
    if sorted(o) != list(range(1, params.r + 1)):
        raise UsageError(f"--ordering must be a permutation of 1..{params.r}")
    return [tuple(v - 1 for v in o)]


def _run_relation(name: str, params: Params, args) -> list:
    K, N, literal = args.max_degree, args.degree, args.literal
    xs = (_rational(args.x, "--x"),) if args.x else DEFAULT_XS
    orderings = _ordering(args, params) or list(itertools.permutations(range(params.r)))
    pairs = [(i, j) for i in range(params.r) for j in range(params.r) if i != j]

    if name == "recurrence-path":
        return (meixner.closed_form_sweep(params) + meixner.monic_sweep(params, K)
                + meixner.path_sweep(params, K))
    if name == "pairwise":
        return meixner.pairwise_sweep(params, K)
    if name == "non-nearest":
        return meixner.non_nearest_sweep(params, K)
    if name in meixner.RELATION_KINDS:
        return meixner.relation_sweep(params, K, kinds=(name,))
    if name == "diffeq-x":
        return [meixner.check_diffeq_x(params, n, o, graded=not literal)
                for n in meixner.indices(params.r, K) for o in orderings]
    if name == "diffeq-beta":
        return [meixner.check_diffeq_beta(params, n, DEFAULT_BETA_SAMPLES, o, graded=not literal)
                for n in meixner.indices(params.r, K) for o in orderings]
    if name == "orthogonality":
        return moments.orthogonality_sweep(params, K)
    if name == "genfun":
        return genfun.genfun_sweep(params, args.order)
    if name == "fock-eigen":
        return [fock.check_eigen(params, x, N, i, fam)
                for x in xs for i in range(params.r) for fam in ("H", "Hbar")]
    if name == "fock-commutator":
        form = "on-shell" if literal else "full"
        return [fock.check_commutator(params, N, i, j, form) for i, j in pairs]
    if name == "fock-weak":
        return [fock.check_weak_commute(params, x, N, i, j) for x in xs for i, j in pairs]
    if name == "fock-shift":
        return [fock.check_shift_relations(params, N, xs, "operator" if literal else "on-shell")]
    if name == "fock-conjugation":
        return [fock.check_conjugation(params, N, i, 1 if literal else -1)
                for i in range(params.r)]
    if name == "su11":
        return [fock.su11_checks(params, N)]
    raise UsageError(f"unknown relation {name!r}")


def _check(args) -> tuple:
    params = _params(args, required=False)
    if args.relation == "all":
        sets = [params] if params else list(DEFAULT_PARAMS)
        names = RELATIONS
    else:
        if params is None:
            params = DEFAULT_PARAMS[1] if args.relation != "su11" else DEFAULT_PARAMS[0]
        if args.relation == "su11" and params.r != 1:
            raise UsageError("su11 checks need r = 1")
        sets, names = [params], (args.relation,)
    if args.degree < 4 or args.max_degree < 1 or args.order < 0:
        raise UsageError("need --degree >= 4, --max-degree >= 1, --order >= 0")

    runs, full = [], []
    for p in sets:
        checks, reports = [], []
        for name in names:
            if name == "su11" and p.r != 1:
                continue
            rs = _run_relation(name, p, args)
            checks.append(summarize(name, rs))
            reports.append({"check": name, "reports": [r.to_json() for r in rs]})
        runs.append({"params": p.to_json(), "checks": checks})
        full.append({"params": p.to_json(), "checks": reports})
    ok = all(c["pass"] for run in runs for c in run["checks"])
    return {"pass": ok, "runs": runs}, {"pass": ok, "runs": full}, ok


# -- entry point ---------------------------------------------------------------------

def _emit(payload, args, full=None) -> None:
    text = payload if isinstance(payload, str) else json.dumps(payload)
    sys.stdout.write(text + ("" if text.endswith("\n") else "\n"))
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            body = full if full is not None else payload
            fh.write(body if isinstance(body, str) else json.dumps(body, indent=1))


def _table_csv(params: Params, polys: dict) -> str:
    width = max((p.degree for p in polys.values()), default=0) + 1
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"n{k + 1}" for k in range(params.r)] + [f"x^{k}" for k in range(width)])
    for n, p in polys.items():
        w.writerow(list(n) + [format_rational(p[k]) for k in range(width)])
    return buf.getvalue()


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        cmd = args.command
        if cmd is None:
            raise UsageError("missing subcommand")
        if cmd == "poly":
            params = _params(args)
            _emit({"poly": meixner.mm_poly(params, _multi_index(args, params)).to_json()}, args)
        elif cmd == "eval":
            params = _params(args)
            n = _multi_index(args, params)
            if args.x is None:
                raise UsageError("--x is required")
            value = meixner.mm_eval(params, n, _rational(args.x, "--x"))
            _emit({"value": format_rational(value)}, args)
        elif cmd == "table":
            params = _params(args)
            polys = {n: meixner.mm_poly(params, n)
                     for n in meixner.indices(params.r, args.max_degree)}
            if args.format == "csv":
                _emit(_table_csv(params, polys), args)
            else:
                _emit({"table": [{"index": list(n), "poly": p.to_json()}
                                 for n, p in polys.items()]}, args)
        elif cmd == "genfun":
            params = _params(args)
            _emit(genfun.genfun_json(params, args.order), args)
        elif cmd == "check":
            summary, full, ok = _check(args)
            _emit(summary, args, full)
            return 0 if ok else 1
        elif cmd == "fock":
            if args.fock_command != "dump":
                raise UsageError("usage: mm fock dump NAME [params] --degree N")
            params = _params(args)
            try:
                matrix = fock.op_matrix(args.name, params, args.degree)
            except ValueError as exc:
                raise UsageError(str(exc))
            _emit(matrix.to_json(), args)
        elif cmd == "spectrum":
            params = _params(args)
            try:
                vals = fock.spectrum_diag(params, args.degree, args.name)
            except ValueError as exc:
                raise UsageError(str(exc))
            _emit({"name": args.name, "degree": args.degree,
                   "eigenvalues": [[float(v.real), float(v.imag)] for v in vals]}, args)
    except UsageError as exc:
        sys.stderr.write(f"mm: error: {exc}\n")
        return 2
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
