"""Command-line interface: ``nilorbits <group> <command> ...``."""

from __future__ import annotations

import argparse
import json
import sys

from .linalg import DimensionError
from .oracle import jordan_type
from .partitions import Partition, PartitionError, dominates
from .poly import PolyError
from .poset import build_poset, degenerations, orbit_dimension, to_dot
from .quiver import (
    QuiverError, QuiverPoint, check_relations, is_stable, kp_project, maffei_dims,
)
from .reduction import (
    OrbitPair, ReductionError, canonical_label, complement, reduction_trace,
)
from .slices import chi_invariants, slodowy_slice
from .specht import DEFAULT_MAX_N, irreducible_dims_table, specht_module
from .verify import run_suite


def _partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except PartitionError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _int_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"cannot parse integer list {text!r}") from None


def _dump(data) -> str:
    return json.dumps(data, separators=(",", ":"))


# -- handlers -----------------------------------------------------------------

def cmd_orbit_hasse(args, out):
    poset = build_poset(args.n)
    if args.dot:
        out.write(to_dot(poset))
    elif args.json:
        out.write(_dump(poset.to_json()) + "\n")
    else:
        for e in poset.edges:
            out.write(f"({e.source}) -> ({e.target}) {e.notation()} codim {e.codim}\n")


def cmd_orbit_covers(args, out):
    for d in degenerations(args.lam):
        out.write(f"({d.target}) {d.notation()} codim {d.codim}\n")


def cmd_orbit_dim(args, out):
    out.write(f"{orbit_dimension(args.lam)}\n")


def cmd_orbit_dominates(args, out):
    out.write("true\n" if dominates(args.mu, args.lam) else "false\n")


def _slice_for(mu: Partition, n: int):
    if mu.n != n:
        raise PartitionError(f"{mu} is a partition of {mu.n}, not {n}")
    return slodowy_slice(mu)


def cmd_slice_chart(args, out):
    chart = _slice_for(args.mu, args.n)
    out.write(f"variables: {' '.join(chart.variables)}\n")
    for row in chart.chart.rows:
        out.write("[" + ", ".join(str(p) for p in row) + "]\n")


def cmd_slice_equations(args, out):
    chart = _slice_for(args.mu, args.n)
    for i, chi in enumerate(chi_invariants(chart.chart), start=1):
        out.write(f"chi_{i} = {chi}\n")


def cmd_quiver_dims(args, out):
    out.write(_dump(maffei_dims(args.lam, args.mu, args.r).to_json()) + "\n")


def cmd_quiver_check(args, out):
    with open(args.point) as fh:
        point = QuiverPoint.from_json(json.load(fh))
    report = {"relations": check_relations(point), "stable": is_stable(point)}
    if point.data.is_mu_trivial() and report["relations"]:
        x = kp_project(point)
        report["projection"] = x.tolist()
        report["jordan_type"] = list(jordan_type(x).parts)
    out.write(_dump(report) + "\n")


def cmd_reduce(args, out):
    trace = reduction_trace(OrbitPair(args.lam, args.mu))
    final = trace[-1][1]
    label = canonical_label(final)
    if args.json:
        out.write(_dump({"trace": [{"move": m, "pair": p.to_json()} for m, p in trace],
                         "canonical": final.to_json(),
                         "label": str(label) if label else None}) + "\n")
        return
    if args.trace:
        for move, pair in trace:
            out.write(f"{move} {pair}\n")
    out.write(f"canonical {final}\n")
    if label is not None:
        out.write(f"label {label}\n")


def cmd_complement(args, out):
    pair = complement(OrbitPair(args.lam, args.mu), args.t, args.m)
    out.write(f"{pair}\n")


def cmd_specht_gram(args, out):
    module = specht_module(args.lam, args.max_n)
    for row in module.gram:
        out.write(" ".join(str(x) for x in row) + "\n")


def cmd_specht_dims(args, out):
    for mu, dim_s, dim_d in irreducible_dims_table(args.n, args.p, args.max_n):
        out.write(f"({mu}) dim S = {dim_s} dim D = {dim_d}\n")


def cmd_verify(args, out):
    checks = run_suite(args.suite, args.seed)
    for c in checks:
        out.write(c.line() + "\n")
    return 0 if all(c.passed for c in checks) else 1


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="nilorbits",
                                     description="Nilpotent orbits of sl_n and their slices.")
    sub = parser.add_subparsers(dest="group", required=True)

    orbit = sub.add_parser("orbit", help="closure order on nilpotent orbits")
    osub = orbit.add_subparsers(dest="command", required=True)
    p = osub.add_parser("hasse", help="Hasse diagram with singularity labels")
    p.add_argument("n", type=int)
    fmt = p.add_mutually_exclusive_group()
    fmt.add_argument("--dot", action="store_true")
    fmt.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_orbit_hasse)
    p = osub.add_parser("covers", help="minimal degenerations of a partition")
    p.add_argument("lam", type=_partition)
    p.set_defaults(func=cmd_orbit_covers)
    p = osub.add_parser("dim", help="orbit dimension")
    p.add_argument("lam", type=_partition)
    p.set_defaults(func=cmd_orbit_dim)
    p = osub.add_parser("dominates", help="is mu dominated by lam")
    p.add_argument("mu", type=_partition)
    p.add_argument("lam", type=_partition)
    p.set_defaults(func=cmd_orbit_dominates)

    sl = sub.add_parser("slice", help="Slodowy slices")
    ssub = sl.add_subparsers(dest="command", required=True)
    for name, func in (("chart", cmd_slice_chart), ("equations", cmd_slice_equations)):
        p = ssub.add_parser(name)
        p.add_argument("mu", type=_partition)
        p.add_argument("n", type=int)
        p.set_defaults(func=func)

    qv = sub.add_parser("quiver", help="quiver data")
    qsub = qv.add_subparsers(dest="command", required=True)
    p = qsub.add_parser("dims", help="dimension vectors (v, w)")
    p.add_argument("lam", type=_partition)
    p.add_argument("mu", type=_partition)
    p.add_argument("--r", type=_int_list, default=None, help="comma-separated r vector")
    p.set_defaults(func=cmd_quiver_dims)
    p = qsub.add_parser("check", help="check relations and stability of a point")
    p.add_argument("point")
    p.set_defaults(func=cmd_quiver_check)

    p = sub.add_parser("reduce", help="strip common rows and columns")
    p.add_argument("lam", type=_partition)
    p.add_argument("mu", type=_partition)
    p.add_argument("--trace", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("complement", help="complement in a t x m rectangle")
    p.add_argument("lam", type=_partition)
    p.add_argument("mu", type=_partition)
    p.add_argument("t", type=int)
    p.add_argument("m", type=int)
    p.set_defaults(func=cmd_complement)

    sp = sub.add_parser("specht", help="Specht modules")
    spsub = sp.add_subparsers(dest="command", required=True)
    p = spsub.add_parser("gram", help="integer Gram matrix")
    p.add_argument("lam", type=_partition)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.set_defaults(func=cmd_specht_gram)
    p = spsub.add_parser("dims", help="dim D_mu for p-restricted mu")
    p.add_argument("n", type=int)
    p.add_argument("p", type=int)
    p.add_argument("--max-n", type=int, default=DEFAULT_MAX_N)
    p.set_defaults(func=cmd_specht_dims)

    p = sub.add_parser("verify", help="run a property suite")
    p.add_argument("--suite", default="all")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_verify)
    return parser


DOMAIN_ERRORS = (ValueError, DimensionError, PolyError, QuiverError, ReductionError,
                 OSError, json.JSONDecodeError, KeyError)


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    args = build_parser().parse_args(argv)
    try:
        status = args.func(args, out)
    except DOMAIN_ERRORS as exc:
        msg = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        print(f"error: {msg}", file=sys.stderr)
        return 1
    return status or 0


if __name__ == "__main__":
    sys.exit(main())
