"""Command line front end.

    mgsc weyl E8
    mgsc sylow G2 --ell 2
    mgsc gl 4 --ell 2 --format json
    mgsc gl-locate 4,2,1 --ell 2
    mgsc classical C3
    mgsc exceptional E8 --ell 3

Exit status: 0 on success, 2 on invalid input, 1 if an internal
consistency check fails. ``MGSC_FORMAT`` sets the default output format.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import classical, glspringer, rootdata, tables
from .factored import FactoredOrder, require_prime
from .partitions import format_partition, parse_partition
from .rootdata import InvariantError, parse_cartan_type

FORMATS = ("text", "json")


def _order_text(order: FactoredOrder) -> str:
    return f"{order.value} = {order}"


def _subset_text(J) -> str:
    return "[" + ",".join(map(str, J)) + "]"


def _emit(args, query: dict, result: dict, lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps({"query": query, "result": result}, indent=2, sort_keys=False))
    else:
        print("\n".join(lines))


def cmd_weyl(args) -> None:
    t = parse_cartan_type(args.type)
    order = rootdata.weyl_order(t)
    _emit(
        args,
        {"command": "weyl", "type": str(t)},
        {"type": str(t), "order": order.to_json()},
        [f"|W({t})| = {_order_text(order)}"],
    )


def cmd_sylow(args) -> None:
    t = parse_cartan_type(args.type)
    ell = require_prime(args.ell)
    order = rootdata.weyl_order(t)
    d = rootdata.dynkin_diagram(t)
    minimal = []
    for J in rootdata.sylow_minimal_levis(t, ell):
        comps = [str(c) for c in rootdata.subdiagram_components(d, J)]
        minimal.append((J, comps, rootdata.parabolic_order(t, J)))
    cusp = rootdata.is_regular_pair_cuspidal(t, ell)
    princ = rootdata.is_regular_pair_principal(t, ell)

    lines = [f"type {t}, ell = {ell}", f"|W| = {_order_text(order)}",
             f"minimal J with {ell} not dividing |W/W_J|:"]
    width = max(len(_subset_text(J)) for J, _, _ in minimal)
    for J, comps, o in minimal:
        label = "+".join(comps) if comps else "(torus)"
        lines.append(f"  {_subset_text(J):<{width}}  {label:<12}  |W_J| = {_order_text(o)}")
    lines.append(f"regular pair: cuspidal={str(cusp).lower()} principal={str(princ).lower()}")
    _emit(
        args,
        {"command": "sylow", "type": str(t), "ell": ell},
        {
            "type": str(t),
            "ell": ell,
            "weyl_order": order.to_json(),
            "minimal_subsets": [
                {"subset": list(J), "components": comps, "order": o.to_json()} for J, comps, o in minimal
            ],
            "cuspidal": cusp,
            "principal": princ,
        },
        lines,
    )


def _table(header: list[str], rows: list[list[str]]) -> list[str]:
    widths = [max(len(r[i]) for r in [header] + rows) for i in range(len(header))]
    fmt = lambda r: "  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
    return [fmt(header), fmt(["-" * w for w in widths])] + [fmt(r) for r in rows]


def cmd_gl(args) -> None:
    ell = require_prime(args.ell)
    if args.n < 1:
        raise ValueError("n must be a positive integer")
    rows = glspringer.full_correspondence(args.n, ell)
    text_rows = [
        [format_partition(r.datum.nu), str(r.labels), format_partition(r.lam)] for r in rows
    ]
    lines = [f"GL({args.n}), ell = {ell}: {len(rows)} pairs"] + _table(["nu", "labels", "lambda"], text_rows)
    _emit(
        args,
        {"command": "gl", "n": args.n, "ell": ell},
        {"n": args.n, "ell": ell, "rows": [r.to_json() for r in rows]},
        lines,
    )


def _series_description(nu) -> str:
    if len(nu) == 1:
        return "cuspidal"
    if nu[0] == 1:
        return "principal series"
    factors = []
    for p in sorted(set(nu), reverse=True):
        m = nu.count(p)
        factors.append(f"GL({p})" + (f"^{m}" if m > 1 else ""))
    return "series of L_nu = " + " x ".join(factors)


def cmd_gl_locate(args) -> None:
    ell = require_prime(args.ell)
    lam = parse_partition(args.partition)
    datum, labels = glspringer.locate(lam, ell)
    if glspringer.induce(datum, labels, ell).lam != lam:
        raise InvariantError(f"induce(locate({format_partition(lam)})) does not round-trip")
    series = _series_description(datum.nu)
    _emit(
        args,
        {"command": "gl-locate", "partition": format_partition(lam), "ell": ell},
        {
            "lambda": format_partition(lam),
            "nu": format_partition(datum.nu),
            "labels": [format_partition(x) for x in labels],
            "series": series,
        },
        [
            f"lambda = {format_partition(lam)}, ell = {ell}",
            f"nu     = {format_partition(datum.nu)}",
            f"labels = {labels}",
            f"series: {series}",
        ],
    )


def cmd_classical(args) -> None:
    if args.ell != 2:
        raise ValueError(
            "classical: only ell = 2 is supported (cuspidal pairs on distinguished orbits of "
            "simply connected B/C/D groups in characteristic 2)"
        )
    t = parse_cartan_type(args.type)
    orbits = classical.cuspidal_pairs_char2(t)
    for o in orbits:
        if not classical.oracle_is_distinguished(o):
            raise InvariantError(f"{o} failed the grading check")
    lines = [f"type {t}, ell = 2: {len(orbits)} cuspidal pairs (O, triv)"]
    lines += [f"  {o}" for o in orbits]
    _emit(
        args,
        {"command": "classical", "type": str(t), "ell": 2},
        {"type": str(t), "ell": 2, "cuspidal_orbits": [str(o) for o in orbits]},
        lines,
    )


def cmd_exceptional(args) -> None:
    t = parse_cartan_type(args.type)
    ell = require_prime(args.ell)
    count = tables.cuspidal_count_exceptional(t, ell)
    regular = rootdata.is_regular_pair_cuspidal(t, ell)
    result = {"type": str(t), "ell": ell, "cuspidal_pairs": count, "regular_pair_cuspidal": regular}
    lines = [f"type {t}, ell = {ell}: {count} cuspidal pairs",
             f"regular pair cuspidal: {str(regular).lower()}"]
    if t.series == "G":
        assignments = tables.g2_correspondence(ell)
        result["g2_correspondence"] = [a.to_json() for a in assignments]
        lines.append(f"{len(assignments)} pairs:")
        lines += _table(
            ["orbit", "local system", "series"],
            [[a.pair.orbit, a.pair.local_system, a.series] for a in assignments],
        )
    _emit(args, {"command": "exceptional", "type": str(t), "ell": ell}, result, lines)


def build_parser() -> argparse.ArgumentParser:
    default_format = os.environ.get("MGSC_FORMAT", "text")
    if default_format not in FORMATS:
        default_format = "text"
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=FORMATS, default=default_format)

    parser = argparse.ArgumentParser(prog="mgsc", description="Modular generalized Springer correspondence data.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("weyl", parents=[common], help="Weyl group order")
    p.add_argument("type")
    p.set_defaults(func=cmd_weyl)

    p = sub.add_parser("sylow", parents=[common], help="minimal Levis containing an ell-Sylow")
    p.add_argument("type")
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=cmd_sylow)

    p = sub.add_parser("gl", parents=[common], help="full correspondence for GL(n)")
    p.add_argument("n", type=int)
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=cmd_gl)

    p = sub.add_parser("gl-locate", parents=[common], help="series and label of an orbit of GL(n)")
    p.add_argument("partition")
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=cmd_gl_locate)

    p = sub.add_parser("classical", parents=[common], help="cuspidal pairs for B/C/D at ell = 2")
    p.add_argument("type")
    p.add_argument("--ell", type=int, default=2)
    p.set_defaults(func=cmd_classical)

    p = sub.add_parser("exceptional", parents=[common], help="stored cuspidal counts (and G2 series)")
    p.add_argument("type")
    p.add_argument("--ell", type=int, required=True)
    p.set_defaults(func=cmd_exceptional)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        args.func(args)
    except InvariantError as exc:
        print(f"mgsc: internal check failed: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"mgsc: error: {exc}", file=sys.stderr)
        return 2
    return 0


if __name__ == "__main__":
    sys.exit(main())
