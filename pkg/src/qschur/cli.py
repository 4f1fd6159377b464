"""Command-line front end: ``qschur <subcommand> [options]``.

Exit codes: 0 on success, 1 when a verification or consistency check fails,
2 on malformed input (argparse prints the usage text on stderr).
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Sequence

from .combinat import is_partition, is_strong, parse_composition
from .demazure import atom_via_ct, atom_via_keys, demazure_atom, demazure_char
from .insertion import rct_insert
from .lrrule import expand_product, expansion_matches_product
from .lspaths import atom_via_paths
from .macdonald import macdonald_poly
from .patterns import Theta, TriArray, gt_from_tableau, is_cap, psi, theta
from .permutations import Perm
from .tableaux import check_ct, check_rct, parse_rows
from .tableaux import latex as tableau_latex
from .tableaux import pretty as tableau_pretty
from .tableaux import to_json as tableau_json
from .verify import SUITES, default_jobs, run_suite

ATOM_METHODS = {
    "pibar": demazure_atom,
    "ct": atom_via_ct,
    "keys": atom_via_keys,
    "paths": atom_via_paths,
}


# expand-product confirms the product identity in this many variables at most
CHECK_VARIABLES = 5


class UsageError(Exception):
    """Raised for well-formed flags carrying unusable values; reported with exit code 2."""


# ---------------------------------------------------------------------------
# argument helpers
# ---------------------------------------------------------------------------


def _composition(text: str) -> tuple[int, ...]:
    try:
        return parse_composition(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _perm(text: str) -> Perm:
    try:
        p = Perm.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"malformed permutation {text!r}") from exc
    if sorted(p) != list(range(1, len(p) + 1)):
        raise argparse.ArgumentTypeError(f"{text!r} is not a permutation in one-line notation")
    return p


def _point(text: str) -> tuple[Fraction, Fraction]:
    values: dict[str, Fraction] = {}
    try:
        for item in text.split(","):
            key, value = item.split("=")
            values[key.strip()] = Fraction(value.strip())
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected q=Q,t=T, got {text!r}") from exc
    if set(values) != {"q", "t"}:
        raise argparse.ArgumentTypeError(f"expected q=Q,t=T, got {text!r}")
    return values["q"], values["t"]


def _read_json(path: str) -> Any:
    try:
        text = Path(path).read_text() if path != "-" else sys.stdin.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return {"rows": [list(r) for r in parse_rows(text)]}


def _rows_of(data: Any) -> tuple[tuple[int, ...], ...]:
    rows = data["rows"] if isinstance(data, dict) else data
    try:
        return tuple(tuple(int(v) for v in r) for r in rows)
    except (TypeError, ValueError) as exc:
        raise UsageError("expected rows of integers") from exc


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------


def _emit(fmt: str, payload: dict, text: str, latex: str) -> None:
    if fmt == "json":
        print(json.dumps(payload, indent=2))
    elif fmt == "latex":
        print(latex)
    else:
        print(text)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_expand_product(args: argparse.Namespace) -> int:
    if not is_strong(args.alpha):
        raise UsageError("--alpha must be a strong composition")
    if not is_partition(args.lam):
        raise UsageError("--lambda must be a partition")
    try:
        exp = expand_product(args.alpha, args.lam, args.n, check=False)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    # the identity restricted to fewer variables is a cheap consequence of the full one
    m = min(sum(args.alpha) + sum(args.lam), CHECK_VARIABLES)
    ok = expansion_matches_product(exp.alpha, exp.lam, exp.terms, m)
    data = exp.to_json()
    data["checked_in_variables"] = m
    data["ok"] = ok
    text = "\n".join(f"{t['coeff']} RS({','.join(map(str, t['beta']))})" for t in data["terms"])
    latex = " + ".join(
        (f"{t['coeff']}" if t["coeff"] != 1 else "") + r"\mathcal{RS}_{(" + ",".join(map(str, t["beta"])) + ")}"
        for t in data["terms"]
    )
    _emit(args.format, data, text, latex)
    return 0 if ok else 1


def cmd_atom(args: argparse.Namespace) -> int:
    gamma = args.gamma
    if len(gamma) != args.n:
        raise UsageError("--gamma must have exactly --n parts")
    methods = list(ATOM_METHODS) if args.method == "all" else [args.method]
    results = {m: ATOM_METHODS[m](gamma) for m in methods}
    values = list(results.values())
    agree = all(v == values[0] for v in values)
    data = {
        "gamma": list(gamma),
        "results": {m: p.to_json() for m, p in results.items()},
        "agree": agree,
    }
    text = "\n".join(f"{m}: {p}" for m, p in results.items())
    latex = "\n".join(f"% {m}\n{p.latex()}" for m, p in results.items())
    _emit(args.format, data, text, latex)
    return 0 if agree else 1


def cmd_demazure_char(args: argparse.Namespace) -> int:
    if len(args.tau) != args.n:
        raise UsageError("--tau must be a permutation of 1..n")
    if not is_partition(args.lam) or len(args.lam) > args.n:
        raise UsageError("--lambda must be a partition with at most n parts")
    poly = demazure_char(args.tau, args.lam, args.n)
    data = {"tau": list(args.tau), "lambda": list(args.lam), "char": poly.to_json()}
    _emit(args.format, data, str(poly), poly.latex())
    return 0


def cmd_macdonald(args: argparse.Namespace) -> int:
    gamma = args.gamma
    basement = args.basement
    if basement is not None and len(basement) != len(gamma):
        raise UsageError("--basement must be a permutation of 1..len(gamma)")
    poly = macdonald_poly(gamma, basement)
    data: dict = {"gamma": list(gamma), "basement": list(basement) if basement else None, "E": poly.to_json()}
    if args.at is not None:
        q, t = args.at
        try:
            poly = poly.specialize_poly(q, t)
        except ZeroDivisionError as exc:
            raise UsageError(f"E is not defined at q={q}, t={t}") from exc
        data["at"] = {"q": str(q), "t": str(t)}
        data["E"] = poly.to_json()
    _emit(args.format, data, str(poly), poly.latex())
    return 0


def cmd_bijection(args: argparse.Namespace) -> int:
    rows = _rows_of(_read_json(args.infile))
    if args.kind in ("psi", "cap-gt"):
        if not is_cap(rows):
            raise UsageError("input is not a composition array pattern")
        X = TriArray(rows)
        if args.kind == "psi":
            U = psi(X)
            data = {"kind": "psi", "in": X.to_json(), "out": tableau_json(U)}
            _emit(args.format, data, tableau_pretty(U), tableau_latex(U))
        else:
            G = Theta(X)
            data = {"kind": "cap-gt", "in": X.to_json(), "out": G.to_json()}
            _emit(args.format, data, G.pretty(), G.pretty())
        return 0
    if check_ct(rows) is not None:
        raise UsageError("input is not a column-strict composition tableau")
    Y = theta(rows)
    if args.kind == "theta":
        data = {"kind": "theta", "in": tableau_json(rows), "out": tableau_json(Y)}
        _emit(args.format, data, tableau_pretty(Y), tableau_latex(Y))
        return 0
    n = max((v for r in rows for v in r), default=0)
    G = gt_from_tableau(Y, n)
    data = {"kind": "gt", "in": tableau_json(rows), "out": G.to_json()}
    _emit(args.format, data, G.pretty(), G.pretty())
    return 0


def cmd_insert(args: argparse.Namespace) -> int:
    U = _rows_of(_read_json(args.rct))
    if check_rct(U) is not None:
        raise UsageError("input is not a row-strict composition tableau")
    steps = []
    for b in args.word:
        if b < 1:
            raise UsageError("letters must be positive")
        res = rct_insert(U, b)
        steps.append({"letter": b, **res.to_json()})
        U = res.tableau
    data = {"steps": steps, "tableau": tableau_json(U)}
    _emit(args.format, data, tableau_pretty(U), tableau_latex(U))
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    results = run_suite(args.suite, args.max_size, args.n, args.jobs)
    ok = all(r.ok for r in results)
    data = {"ok": ok, "suites": [r.to_json() for r in results]}
    text = "\n".join(r.line() for r in results)
    latex = "\n".join(r"\item " + r.line() for r in results)
    _emit(args.format, data, text, latex)
    return 0 if ok else 1


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "latex", "text"), default="text")
    common.add_argument("--out", metavar="FILE", default=None, help="write output to FILE instead of stdout")
    common.add_argument("--jobs", type=int, default=default_jobs(), help="worker processes (default $QSCHUR_JOBS or 1)")

    parser = argparse.ArgumentParser(prog="qschur", description="Quasisymmetric Schur and Demazure atom toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("expand-product", parents=[common], help="RS_alpha * s_lambda in the RS basis")
    p.add_argument("--alpha", type=_composition, required=True)
    p.add_argument("--lambda", dest="lam", type=_composition, required=True)
    p.add_argument("--n", type=int, default=None)
    p.set_defaults(func=cmd_expand_product, subparser=p)

    p = sub.add_parser("atom", parents=[common], help="the Demazure atom of gamma")
    p.add_argument("--gamma", type=_composition, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--method", choices=(*ATOM_METHODS, "all"), default="pibar")
    p.set_defaults(func=cmd_atom, subparser=p)

    p = sub.add_parser("demazure-char", parents=[common], help="pi_tau(x^lambda)")
    p.add_argument("--tau", type=_perm, required=True)
    p.add_argument("--lambda", dest="lam", type=_composition, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_demazure_char, subparser=p)

    p = sub.add_parser("macdonald", parents=[common], help="nonsymmetric Macdonald polynomial E_gamma")
    p.add_argument("--gamma", type=_composition, required=True)
    p.add_argument("--basement", type=_perm, default=None)
    p.add_argument("--at", type=_point, default=None, metavar="q=Q,t=T")
    p.set_defaults(func=cmd_macdonald, subparser=p)

    p = sub.add_parser("bijection", parents=[common], help="apply psi, theta, gt or cap-gt to a JSON input")
    p.add_argument("--kind", choices=("psi", "theta", "gt", "cap-gt"), required=True)
    p.add_argument("--in", dest="infile", required=True, metavar="FILE")
    p.set_defaults(func=cmd_bijection, subparser=p)

    p = sub.add_parser("insert", parents=[common], help="insert a word into a row-strict composition tableau")
    p.add_argument("--rct", required=True, metavar="FILE")
    p.add_argument("--word", type=_composition, required=True)
    p.set_defaults(func=cmd_insert, subparser=p)

    p = sub.add_parser("verify", parents=[common], help="run a verification suite")
    p.add_argument("suite", choices=(*SUITES, "all"))
    p.add_argument("--max-size", type=int, default=None, help="size bound (default: per suite)")
    p.add_argument("--n", type=int, default=None, help="variable or entry bound (default: per suite)")
    p.set_defaults(func=cmd_verify, subparser=p)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        if args.out is None:
            return args.func(args)
        try:
            handle = open(args.out, "w")
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc.strerror}") from exc
        with handle, contextlib.redirect_stdout(handle):
            return args.func(args)
    except UsageError as exc:
        args.subparser.print_usage(sys.stderr)
        print(f"{args.subparser.prog}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
