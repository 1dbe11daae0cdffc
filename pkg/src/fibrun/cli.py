"""Command-line front end: ``fibrun vertices|poly|gf|verify|repro``.

Exit codes: 0 success, 1 a verification failed, 2 bad usage.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Callable, List, Optional, Tuple

from . import census, genfunc, graphs, identities
from .errors import ResourceLimit, UnknownId, UnsupportedFamily
from .graphs import Family
from .polyring import MPoly

KINDS = ("dist-cube", "cube", "dcw", "weight", "updeg")
FORMATS = ("text", "json", "csv")


class UsageError(Exception):
    pass


def _poly_census(g: graphs.FamilyGraph, kind: str, method: str) -> MPoly:
    if kind == "dist-cube":
        return census.distance_cube_polynomial(g, method)
    if kind == "cube":
        return census.cube_polynomial(g, method)
    if kind == "dcw":
        return census.dcw_polynomial(g)
    if kind == "weight":
        return census.weight_polynomial(g)
    return census.updeg_polynomial(g)


def _poly_gf(family: Family, n: int, kind: str) -> MPoly:
    q, x = MPoly.var("q"), MPoly.var("x")
    if family is Family.FIBONACCI_RUN:
        if kind == "updeg":
            if n < 1:
                raise UsageError("the up-degree series starts at n = 1")
            return genfunc.catalog_expand("updeg_r", n)[n]
        if kind in ("dcw", "weight"):
            dcw = genfunc.catalog_expand("dcw_r", n)[n]
            if kind == "dcw":
                return dcw
            return dcw.substitute({"z": MPoly.var("d")}).with_vars(("d",))
        d = genfunc.catalog_expand("d_r", n)[n]
    elif family is Family.LUCAS_RUN and kind in ("dist-cube", "cube"):
        d = genfunc.catalog_expand("d_rl", n)[n]
    elif family is Family.FIBONACCI and kind != "updeg":
        w = genfunc.fibonacci_weight_series(n)[n].with_vars(("d",))
        if kind in ("weight", "dcw"):
            return w.with_vars(("d", "z")) if kind == "dcw" else w
        d = w.substitute({"d": q + x}).with_vars(("q", "x"))
    else:
        raise UsageError(f"no generating function for kind {kind!r} on family {family.value!r}")
    if kind == "cube":
        return d.substitute({"q": 1}).with_vars(("x",))
    return d


def _emit_poly(p: MPoly, fmt: str) -> str:
    if fmt == "json":
        return p.to_json()
    if fmt == "csv":
        return _csv(p.csv_rows())
    return p.to_text()


def _csv(rows: List[List[str]]) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    return buf.getvalue().rstrip("\n")


def cmd_vertices(args) -> Tuple[int, str]:
    g = graphs.build(args.family, args.n)
    if args.format == "json":
        return 0, json.dumps(g.vertices)
    if args.format == "csv":
        return 0, _csv([["vertex"]] + [[v] for v in g.vertices])
    return 0, "\n".join(g.vertices)


def cmd_poly(args) -> Tuple[int, str]:
    family = Family.parse(args.family)
    if args.method == "gf":
        p = _poly_gf(family, args.n, args.kind)
    else:
        p = _poly_census(graphs.build(family, args.n), args.kind, args.method)
    return 0, _emit_poly(p, args.format)


def cmd_gf(args) -> Tuple[int, str]:
    key = genfunc.normalize_id(args.id)
    coeffs = genfunc.catalog_expand(key, args.order)
    if args.format == "json":
        return 0, json.dumps({"id": key, "order": args.order,
                              "coefficients": [c.to_dict() for c in coeffs]})
    if args.format == "csv":
        rows = [["n"] + list(genfunc.CATALOG_VARS[key]) + ["coeff"]]
        for n, c in enumerate(coeffs):
            rows += [[str(n)] + row for row in c.csv_rows()[1:]]
        return 0, _csv(rows)
    return 0, "\n".join(f"{n}: {c.to_text()}" for n, c in enumerate(coeffs))


def cmd_verify(args) -> Tuple[int, str]:
    report = identities.verify(args.id, args.n_max, threads=args.threads)
    text = report.to_json() if args.format == "json" else report.to_text()
    return (0 if report.passed else 1), text


def _claim_r5() -> bool:
    d = census.distance_cube_polynomial(graphs.build("r", 5), "oracle")
    return d.to_text() == "1+5q+6q^2+q^3+(5+12q+2q^2)x+(6+q)x^2"


def _claim_first_six() -> bool:
    expected = ["1+q+x", "1+2q+2x", "1+3q+q^2+(3+2q)x+x^2", "1+4q+3q^2+(4+6q)x+3x^2",
                "1+5q+6q^2+q^3+(5+12q+2q^2)x+(6+q)x^2",
                "1+6q+10q^2+4q^3+(6+20q+10q^2)x+(10+8q)x^2+2x^3"]
    return genfunc.series_text(genfunc.catalog_expand("d_r", 6)[1:]) == expected


def _claim_naive_r5() -> bool:
    naive = census.naive_distance_polynomial(graphs.build("r", 5))
    return naive.to_text() == "1+5q+7q^2+(5+14q)x+7x^2" != census.distance_cube_polynomial(
        graphs.build("r", 5)).to_text()


def _claim_non_isometric() -> bool:
    return identities.non_isometric_witness(7) is not None and identities.non_isometric_witness(6) is None


CLAIMS: List[Tuple[str, Callable[[], bool]]] = [
    ("D(R_5) by oracle census", _claim_r5),
    ("d_r expansion, n = 1..6", _claim_first_six),
    ("weight-blind R_5 polynomial differs from D(R_5)", _claim_naive_r5),
    ("R_7 not isometric in Q_7, R_6 is", _claim_non_isometric),
]


def cmd_repro(args) -> Tuple[int, str]:
    rows = []
    for name, claim in CLAIMS:
        rows.append((name, claim()))
    for key in identities.IDENTITIES:
        report = identities.verify(key, threads=args.threads)
        rows.append((f"{key} (n <= {report.n_max})", report.passed))
    ok = all(passed for _, passed in rows)
    if args.format == "json":
        text = json.dumps([{"claim": name, "passed": passed} for name, passed in rows], indent=2)
    else:
        width = max(len(name) for name, _ in rows)
        text = "\n".join(f"{name.ljust(width)}  {'pass' if passed else 'FAIL'}"
                         for name, passed in rows)
    return (0 if ok else 1), text


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fibrun", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    families = [f.value for f in Family]

    def common(p, formats=FORMATS):
        p.add_argument("--format", choices=formats, default="text")
        p.add_argument("--out", help="write output to this file instead of stdout")

    p = sub.add_parser("vertices", help="list the vertex set of a graph")
    p.add_argument("--family", choices=families, required=True)
    p.add_argument("--n", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_vertices)

    p = sub.add_parser("poly", help="enumerator polynomial of a graph")
    p.add_argument("--family", choices=families, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--kind", choices=KINDS, default="dist-cube")
    p.add_argument("--method", choices=("oracle", "topvertex", "gf"), default=None)
    common(p)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("gf", help="expand a catalog generating function")
    p.add_argument("--id", required=True, help="dcw-r, d-r, d-rl or updeg-r")
    p.add_argument("--order", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_gf)

    p = sub.add_parser("verify", help="check one identity for a range of n")
    p.add_argument("--id", required=True, help=", ".join(identities.IDENTITIES))
    p.add_argument("--n-max", type=int, default=None)
    p.add_argument("--threads", type=int, default=None)
    common(p, ("text", "json"))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("repro", help="run every claim and identity check")
    p.add_argument("--threads", type=int, default=None)
    common(p, ("text", "json"))
    p.set_defaults(func=cmd_repro)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "n", 0) is not None and getattr(args, "n", 0) < 0:
        parser.error("--n must be non-negative")
    if getattr(args, "order", 0) < 0:
        parser.error("--order must be non-negative")
    try:
        code, text = args.func(args)
    except (UsageError, UnknownId, UnsupportedFamily, ResourceLimit) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"fibrun: error: {msg}", file=sys.stderr)
        return 2
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
