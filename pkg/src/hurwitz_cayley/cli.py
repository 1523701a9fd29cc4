"""Command-line front end.

Exit codes: 0 success, 1 bad arguments, 2 resource guard, 3 failed
verification.  Rationals are printed as "num/den" strings.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import hurwitz, oracle, ym2
from .characters import character_table, eigenpacket
from .hurwitz import ExpectationWord
from .partitions import as_partition, quadratic_casimir
from .perms import (
    compose, cycle_type, format_one_line, inverse, parse_permutation,
)
from .series import format_rational
from . import checks

EXIT_PARSE, EXIT_RESOURCE, EXIT_VERIFY = 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _partition(text: str):
    try:
        return as_partition(json.loads(text))
    except (json.JSONDecodeError, TypeError) as exc:
        raise UsageError(f"cannot parse partition {text!r}") from exc


def _partition_list(text: str):
    try:
        return tuple(as_partition(p) for p in json.loads(text))
    except (json.JSONDecodeError, TypeError) as exc:
        raise UsageError(f"cannot parse partition list {text!r}") from exc


def _int_list(text: str):
    try:
        return tuple(int(x) for x in json.loads(text))
    except (json.JSONDecodeError, TypeError, ValueError) as exc:
        raise UsageError(f"cannot parse integer list {text!r}") from exc


def _emit(obj, fmt: str = "json") -> None:
    if fmt == "json":
        print(json.dumps(obj, indent=2))
    else:
        print(obj, end="" if str(obj).endswith("\n") else "\n")


def _result(value) -> str:
    return format_rational(value)


# --------------------------------------------------------------------------
# subcommands

def cmd_walks(a) -> int:
    rho = parse_permutation(a.from_, a.d)
    sigma = parse_permutation(a.to, a.d)
    count = oracle.walk_count(a.d, rho, sigma, a.r, oracle.WalkMode.parse(a.mode), memo=a.memo)
    _emit({"d": a.d, "from": format_one_line(rho), "to": format_one_line(sigma),
           "r": a.r, "mode": oracle.WalkMode.parse(a.mode).value, "count": count})
    return 0


def cmd_geodesics(a) -> int:
    rho = parse_permutation(a.from_, a.d)
    sigma = parse_permutation(a.to, a.d)
    alpha = cycle_type(compose(inverse(rho), sigma))
    out = {"d": a.d, "class": list(alpha),
           "geodesics": oracle.geodesic_count(rho, sigma),
           "formula": oracle.hurwitz_cayley_formula(alpha),
           "monotone_geodesics": oracle.monotone_geodesic_count(rho, sigma),
           "catalan_product": oracle.catalan_product(alpha)}
    _emit(out)
    return 0


def cmd_char_table(a) -> int:
    table = character_table(a.d)
    if a.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["lambda"] + [json.dumps(list(al)) for al in table.partitions])
        for lam in table.partitions:
            w.writerow([json.dumps(list(lam))] + table.row(lam))
        _emit(buf.getvalue(), "csv")
    else:
        _emit({"d": a.d, "entries": [
            {"lambda": list(lam), "alpha": list(al), "chi": table[lam, al]}
            for lam in table.partitions for al in table.partitions]})
    return 0


def cmd_eigen(a) -> int:
    lam = _partition(a.lambda_)
    pk = eigenpacket(lam, a.d)
    out = {"lambda": list(lam), "k_hat": _result(pk.khat), "h_hat": _result(pk.hhat),
           "contents": list(pk.contents)}
    if a.q is not None:
        out["omega_hat"] = _result(pk.omegahat(Fraction(a.q)))
    if a.N is not None:
        out["casimir"] = _result(pk.casimir(a.N))
        out["casimir_check"] = _result(quadratic_casimir(lam, a.N))
    _emit(out)
    return 0


def cmd_plancherel(a) -> int:
    word = ExpectationWord(handles=a.handles, classes=_partition_list(a.classes),
                           r=a.r, s=a.s, levels=_int_list(a.levels))
    val = hurwitz.plancherel(word, a.d, a.row_bound)
    out = {"d": a.d, "value": _result(val)}
    if a.oracle:
        out["oracle"] = _result(hurwitz.oracle_expectation(word, a.d))
    _emit(out)
    return 0


def cmd_hurwitz(a) -> int:
    geo = hurwitz.geometry(a.geometry)
    classes = [_partition(x) for x in (a.alpha, a.beta, a.gamma) if x is not None]
    if len(classes) != geo.holes:
        raise UsageError(f"{geo.name} needs {geo.holes} boundary classes "
                         f"(--alpha/--beta/--gamma), got {len(classes)}")
    levels = tuple(x for x in (a.a, a.b) if x is not None)
    if len(levels) != geo.level_count:
        raise UsageError(f"{geo.name} needs {geo.level_count} levels (--a/--b)")
    word = hurwitz.geometry_word(geo, classes, a.r, levels, a.s)
    if a.connected:
        val = Fraction(hurwitz.connected(word, a.d, method=a.method))
    else:
        val = hurwitz.plancherel(word, a.d)
    _emit({"geometry": geo.name, "d": a.d, "connected": a.connected,
           "value": _result(val),
           "genus": hurwitz.genus_label(word, a.d, geo.name),
           "normalized": _result(val / math.factorial(a.d))})
    return 0


def _micro_json(res: ym2.MicrochiralResult) -> dict:
    return {"m": res.spacetime.holes, "n": res.spacetime.handles, "d": res.d, "N": res.N,
            "coefficients": [
                {"t_pow": k, "markers": [list(p) for p in m], "value": _result(c)}
                for (k, m), c in sorted(res.nonzero().items(),
                                        key=lambda kv: (kv[0][0], [[-x for x in p] for p in kv[0][1]]))]}


def cmd_ym2(a) -> int:
    if a.ym2_cmd == "micro":
        st = ym2.Spacetime(a.m, a.n)
        if a.mode == "direct":
            res = ym2.microchiral_direct(st, a.d, a.N, a.t_order)
        else:
            res = ym2.microchiral_expansion(st, a.d, a.N, a.t_order, a.s_order).resummed()
        out = _micro_json(res)
        if a.numeric is not None:
            out["numeric_at_identity"] = str(ym2.microchiral_numeric(st, a.d, a.N, a.numeric))
        _emit(out)
        return 0
    if a.ym2_cmd == "series":
        z, f = ym2.chiral_series(a.geometry, a.max_d, a.t_order, a.s_order)
        _emit((f if a.connected else z).to_dict())
        return 0
    if a.ym2_cmd == "area-zero":
        _emit(ym2.area_zero(a.geometry, a.max_d, a.s_order).to_dict())
        return 0
    raise UsageError("ym2 needs one of: micro, series, area-zero")


def cmd_verify(a) -> int:
    passed, failed = checks.run_suite(a.suite, a.d)
    _emit({"suite": a.suite, "d": a.d, "passed": passed, "failed": failed,
           "status": "pass" if failed == 0 else "fail"})
    return 0 if failed == 0 else EXIT_VERIFY


def cmd_export_graph(a) -> int:
    if a.format != "dot":
        raise UsageError("export-graph only supports --format dot")
    _emit(oracle.export_dot(a.d), "dot")
    return 0


# --------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hurwitz-cayley", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="cmd", parser_class=_Parser)

    w = sub.add_parser("walks", help="count label-constrained walks")
    w.add_argument("--d", type=int, required=True)
    w.add_argument("--from", dest="from_", default="id")
    w.add_argument("--to", default="id")
    w.add_argument("--r", type=int, required=True)
    w.add_argument("--mode", default="unrestricted",
                   choices=[m.value for m in oracle.WalkMode] + ["strict", "weak", "any"])
    w.add_argument("--memo", action="store_true")
    w.set_defaults(func=cmd_walks)

    g = sub.add_parser("geodesics", help="enumerate geodesics and compare closed forms")
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--from", dest="from_", default="id")
    g.add_argument("--to", required=True)
    g.set_defaults(func=cmd_geodesics)

    c = sub.add_parser("char-table", help="character table of S^d")
    c.add_argument("--d", type=int, required=True)
    c.add_argument("--format", choices=["json", "csv"], default="json")
    c.set_defaults(func=cmd_char_table)

    e = sub.add_parser("eigen", help="eigenvalues of central operators on V^lambda")
    e.add_argument("--d", type=int, required=True)
    e.add_argument("--lambda", dest="lambda_", required=True)
    e.add_argument("--q", default=None)
    e.add_argument("--N", type=int, default=None)
    e.set_defaults(func=cmd_eigen)

    pl = sub.add_parser("plancherel", help="Plancherel expectation of a word")
    pl.add_argument("--d", type=int, required=True)
    pl.add_argument("--handles", type=int, default=0)
    pl.add_argument("--classes", default="[]")
    pl.add_argument("--r", type=int, default=0)
    pl.add_argument("--s", type=int, default=0)
    pl.add_argument("--levels", default="[]")
    pl.add_argument("--row-bound", type=int, default=None)
    pl.add_argument("--oracle", action="store_true", help="also count tuples directly")
    pl.set_defaults(func=cmd_plancherel)

    h = sub.add_parser("hurwitz", help="Hurwitz number of a geometry template")
    h.add_argument("--geometry", required=True)
    h.add_argument("--d", type=int, required=True)
    h.add_argument("--alpha")
    h.add_argument("--beta")
    h.add_argument("--gamma")
    h.add_argument("--a", type=int)
    h.add_argument("--b", type=int)
    h.add_argument("--r", type=int, default=0)
    h.add_argument("--s", type=int, default=0)
    h.add_argument("--connected", action="store_true")
    h.add_argument("--method", choices=["oracle", "series"], default="oracle")
    h.set_defaults(func=cmd_hurwitz)

    y = sub.add_parser("ym2", help="2D Yang-Mills partition functions")
    ysub = y.add_subparsers(dest="ym2_cmd", parser_class=_Parser)
    mi = ysub.add_parser("micro")
    mi.add_argument("--m", type=int, default=0)
    mi.add_argument("--n", type=int, default=0)
    mi.add_argument("--d", type=int, required=True)
    mi.add_argument("--N", type=int, required=True)
    mi.add_argument("--t-order", type=int, default=0)
    mi.add_argument("--s-order", type=int, default=0)
    mi.add_argument("--mode", choices=["direct", "expansion"], default="direct")
    mi.add_argument("--numeric", default=None, metavar="T",
                    help="also print Z_N^d at U=I and area T (floating point)")
    mi.add_argument("--json", action="store_true", help="JSON output (the default)")
    se = ysub.add_parser("series")
    se.add_argument("--geometry", required=True)
    se.add_argument("--max-d", type=int, required=True)
    se.add_argument("--t-order", type=int, default=2)
    se.add_argument("--s-order", type=int, default=0)
    se.add_argument("--connected", action="store_true")
    az = ysub.add_parser("area-zero")
    az.add_argument("--geometry", required=True)
    az.add_argument("--max-d", type=int, required=True)
    az.add_argument("--s-order", type=int, default=0)
    y.set_defaults(func=cmd_ym2)

    v = sub.add_parser("verify", help="run a named invariant suite")
    v.add_argument("suite", choices=sorted(checks.SUITES))
    v.add_argument("--d", type=int, default=4)
    v.set_defaults(func=cmd_verify)

    x = sub.add_parser("export-graph", help="Graphviz export of the labelled Cayley graph")
    x.add_argument("--d", type=int, required=True)
    x.add_argument("--format", default="dot")
    x.set_defaults(func=cmd_export_graph)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if not getattr(args, "func", None):
            raise UsageError("a subcommand is required")
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except oracle.ResourceLimitError as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (ValueError, ZeroDivisionError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
