"""Command line front end: ``linkmu <command> ...``.

Link arguments accept either a path to a JSON link file or a fixture name
(see ``linkmu fixtures list``).  Exit codes: 0 success / criterion holds,
1 criterion fails or a cross-check mismatches, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import criteria, laurent
from .fixtures import get_fixture, list_fixtures
from .laurent import NotExpressibleInZ
from .milnor import (
    LinkPresentation,
    PresentationError,
    delta,
    ends_with,
    format_index,
    mu,
    mu_table,
    mubar,
    parse_index,
    r,
)
from .seifert import (
    MatrixFormatError,
    build_kk_matrix,
    conway_from_seifert,
    format_matrix_text,
    kk_closed_form,
    parse_matrix_text,
    validate_knot_matrix,
)
from .words import WordParseError

SCHEMA = 1
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def default_maxlen() -> int:
    raw = os.environ.get("MILNOR_MAXLEN_DEFAULT", "4")
    try:
        value = int(raw)
    except ValueError:
        raise UsageError(f"MILNOR_MAXLEN_DEFAULT must be an integer, got {raw!r}") from None
    if value < 2:
        raise UsageError("MILNOR_MAXLEN_DEFAULT must be >= 2")
    return value


def load_link(spec: str) -> LinkPresentation:
    path = Path(spec)
    if path.is_file():
        try:
            data = json.loads(path.read_text())
        except json.JSONDecodeError as exc:
            raise UsageError(f"{spec}: not valid JSON ({exc})") from None
        try:
            return LinkPresentation.from_dict(data)
        except (PresentationError, WordParseError) as exc:
            raise UsageError(f"{spec}: {exc}") from None
    try:
        fixture = get_fixture(spec)
    except KeyError:
        raise UsageError(f"{spec}: no such file or fixture") from None
    if fixture.presentation is None:
        raise UsageError(f"fixture {spec} has no link presentation")
    return fixture.presentation


def load_matrix(spec: str):
    path = Path(spec)
    if path.is_file():
        try:
            return parse_matrix_text(path.read_text())
        except MatrixFormatError as exc:
            raise UsageError(f"{spec}: {exc}") from None
    try:
        fixture = get_fixture(spec)
    except KeyError:
        raise UsageError(f"{spec}: no such file or fixture") from None
    if fixture.seifert is None:
        raise UsageError(f"fixture {spec} has no Seifert matrix")
    return fixture.seifert


def emit(args, payload: dict, text: str):
    if args.json:
        payload = {"schema": SCHEMA, "command": args.command, **payload}
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        print(text)


# -- commands -----------------------------------------------------------------

def cmd_mu(args) -> int:
    L = load_link(args.link)
    try:
        I = parse_index(args.index)
        value = mu(L, I)
        res = mubar(L, I)
    except (ValueError, PresentationError) as exc:
        raise UsageError(str(exc)) from None
    emit(args, {"index": format_index(I), "mu": value, "mubar": res.value, "modulus": res.modulus,
                "r": r(I)},
         f"mu={value} mubar={res.value} (mod {res.modulus})")
    return EXIT_OK


def cmd_table(args) -> int:
    L = load_link(args.link)
    maxlen = args.maxlen if args.maxlen is not None else default_maxlen()
    if maxlen < 2:
        raise UsageError("--maxlen must be >= 2")
    filters = []
    if args.r_max is not None:
        filters.append(lambda I, k=args.r_max: r(I) <= k)
    if args.ends_with is not None:
        if args.ends_with not in L.component_ids:
            raise UsageError(f"unknown component {args.ends_with}")
        filters.append(ends_with(args.ends_with))
    where = (lambda I: all(f(I) for f in filters)) if filters else None
    rows = mu_table(L, maxlen, where)
    if args.nonzero:
        rows = [(I, res) for I, res in rows if not res.is_zero()]
    emit(args,
         {"maxlen": maxlen,
          "rows": [{"index": format_index(I), "mubar": res.value, "modulus": res.modulus} for I, res in rows]},
         "\n".join(f"{format_index(I)}: {res.value} (mod {res.modulus})" for I, res in rows) or "(empty)")
    return EXIT_OK


def cmd_check(args) -> int:
    L = load_link(args.link)
    if args.which == "nullhomotopy":
        if args.component is None:
            raise UsageError("nullhomotopy needs --component")
        if args.component not in L.component_ids:
            raise UsageError(f"unknown component {args.component}")
        if not L.trivial_rest_asserted:
            raise UsageError("nullhomotopy needs \"trivial_rest_asserted\": true in the link file "
                             "(the other components must form a trivial link)")
        report = criteria.nullhomotopy_test(L, args.component)
    elif args.which == "linkhomotopy":
        report = criteria.linkhomotopy_trivial(L)
    else:
        maxlen = args.maxlen if args.maxlen is not None else default_maxlen()
        if maxlen < 2:
            raise UsageError("--maxlen must be >= 2")
        report = criteria.selfdelta_trivial_up_to(L, maxlen)
    emit(args, report.to_dict(), report.render())
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_conway(args) -> int:
    if (args.matrix is None) == (args.kk is None):
        raise UsageError("give exactly one of a matrix file/fixture or --kk")
    if args.kk is not None:
        if args.kk < 2:
            raise UsageError("--kk needs k >= 2")
        M = build_kk_matrix(args.kk)
    else:
        M = load_matrix(args.matrix)
    if args.closed_form and args.kk is None:
        raise UsageError("--closed-form needs --kk")
    try:
        poly = conway_from_seifert(M)
    except NotExpressibleInZ:
        print("error: not a knot Seifert matrix under convention det(s^-1 M - s M^T)", file=sys.stderr)
        return EXIT_USAGE
    shown = laurent.truncate(poly, args.mod_z) if args.mod_z is not None else poly
    payload = {"size": M.size, "conway": str(shown), "valid_knot_matrix": validate_knot_matrix(M)}
    if args.mod_z is not None:
        payload["mod_z"] = args.mod_z
    lines = [str(shown)]
    status = EXIT_OK
    if args.closed_form:
        closed = kk_closed_form(args.kk)
        match = closed == poly
        payload.update({"closed_form": str(closed), "match": match})
        lines.append(f"closed form: {closed} {'MATCH' if match else 'MISMATCH'}")
        status = EXIT_OK if match else EXIT_FAIL
    emit(args, payload, "\n".join(lines))
    return status


def cmd_kk(args) -> int:
    if args.k < 2:
        raise UsageError("k must be >= 2")
    M = build_kk_matrix(args.k)
    if args.json:
        emit(args, {"k": args.k, "size": M.size, "rows": M.rows()}, "")
    else:
        sys.stdout.write(format_matrix_text(M))
    return EXIT_OK


def cmd_lk_pipeline(args) -> int:
    if args.k < 2:
        raise UsageError("k must be >= 2")
    k = args.k
    run = criteria.lk_pipeline(k)
    lines = [
        f"k = {k}",
        f"conway(K_{k}) = {run.conway_kk}",
        f"z - z*conway(K_{k}) = {run.combined}",
        f"conway(L_{k}) mod z^{2 * k} = {run.truncated}",
        f"a_{2 * k - 1} = {run.a}",
        f"mubar([{k},{k}]) = {run.mubar_kk}",
    ]
    emit(args, run.to_dict(), "\n".join(lines))
    return EXIT_OK if run.only_top_term else EXIT_FAIL


def cmd_obstruction(args) -> int:
    p = args.p
    if abs(p) < 2:
        raise UsageError(f"--p {p}: need |p| >= 2; for linking number +-1 the two knots are "
                         "Delta concordant, so there is nothing to obstruct")
    residue, distinct = criteria.satellite_obstruction(p)
    eps = 1 if p > 0 else -1
    verdict = ("L_p^+ and L_p^- are NOT self-Delta concordant" if distinct
               else "no obstruction")
    lines = [
        f"p = {p}, eps = {eps}",
        f"a_3(L_p^0) = p - eps = {p - eps}",
        f"mubar(1122) difference = {residue} (mod {abs(p)})",
        f"residue {residue} mod {abs(p)}: {verdict}",
    ]
    emit(args, {"p": p, "eps": eps, "a3": p - eps, "residue": residue, "modulus": abs(p),
                "distinct": distinct}, "\n".join(lines))
    return EXIT_OK


def cmd_fixtures(args) -> int:
    if args.action == "list":
        items = list_fixtures()
        payload = {"fixtures": [
            {"name": f.name, "notes": f.notes,
             "kind": "link" if f.presentation is not None else "seifert"} for f in items]}
        emit(args, payload, "\n".join(
            f"{f.name:<12} {'link' if f.presentation is not None else 'seifert':<8} {f.notes}" for f in items))
        return EXIT_OK
    if not args.name:
        raise UsageError("fixtures show needs a NAME")
    try:
        f = get_fixture(args.name)
    except KeyError:
        raise UsageError(f"no fixture {args.name!r}") from None
    if f.presentation is not None:
        print(json.dumps(f.presentation.to_dict(), indent=2))
    else:
        sys.stdout.write(format_matrix_text(f.seifert))
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="structured output")

    parser = argparse.ArgumentParser(prog="linkmu", description="Milnor invariants and Conway polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("mu", parents=[common], help="mu and mubar for one multi-index")
    p.add_argument("link")
    p.add_argument("index", help='digits, e.g. "1122"')
    p.set_defaults(func=cmd_mu)

    p = sub.add_parser("table", parents=[common], help="mubar for all multi-indices up to a length")
    p.add_argument("link")
    p.add_argument("--maxlen", type=int)
    p.add_argument("--r-max", type=int, help="keep indices with r(I) <= R")
    p.add_argument("--ends-with", type=int, metavar="ID")
    p.add_argument("--nonzero", action="store_true")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check", parents=[common], help="triviality criteria")
    p.add_argument("link")
    p.add_argument("which", choices=["nullhomotopy", "linkhomotopy", "selfdelta"])
    p.add_argument("--component", type=int)
    p.add_argument("--maxlen", type=int)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("conway", parents=[common], help="Conway polynomial from a Seifert matrix")
    p.add_argument("matrix", nargs="?", help="matrix file or fixture name")
    p.add_argument("--kk", type=int, metavar="K")
    p.add_argument("--mod-z", type=int, metavar="M")
    p.add_argument("--closed-form", action="store_true")
    p.set_defaults(func=cmd_conway)

    p = sub.add_parser("kk", parents=[common], help="print the Seifert matrix of K_k")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_kk)

    p = sub.add_parser("lk-pipeline", parents=[common], help="mubar([k,k]) of L_k via Conway polynomials")
    p.add_argument("k", type=int)
    p.set_defaults(func=cmd_lk_pipeline)

    p = sub.add_parser("obstruction", parents=[common], help="L_p^+ vs L_p^- residue")
    p.add_argument("--p", type=int, required=True)
    p.set_defaults(func=cmd_obstruction)

    p = sub.add_parser("fixtures", parents=[common], help="built-in links and matrices")
    p.add_argument("action", choices=["list", "show"])
    p.add_argument("name", nargs="?")
    p.set_defaults(func=cmd_fixtures)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
