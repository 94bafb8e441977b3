"""Command-line interface: ``opdet <subcommand> [flags]``.

Exit codes: 0 success or pass, 1 identity failure or positivity violation,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from typing import Sequence

from . import dets
from .errors import OpdetError
from .exactcore import UniPoly, fmt_rational, parse_rational
from .measures import NodeSet, moments, parse_measure, parse_nodes
from .opoly import (
    JensenSeq,
    classical_poly,
    classical_q_closed,
    jensen,
    orth_poly,
    q_nodes,
    q_poly,
    r_poly,
)
from .verify.convergence import jensen_convergence
from .verify.identities import IdentityId, default_specs_for, verify_all, verify_identity
from .verify.plan import DEFAULT_SEED, SamplePlan
from .verify.positivity import positivity_scan

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _ints(text: str) -> list:
    try:
        return [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise OpdetError(f"expected comma-separated integers, got {text!r}") from None


def _rationals(text: str) -> list:
    return [parse_rational(v) for v in text.split(",") if v.strip()]


def _nodeset(args) -> NodeSet:
    if not args.nodes:
        return NodeSet()
    nodes = parse_nodes(args.nodes)
    if getattr(args, "mults", None):
        mults = _ints(args.mults)
        if any(m != 1 for m in nodes.mults):
            raise OpdetError("give multiplicities either as t^m or with --mults, not both")
        nodes = NodeSet.of(nodes.nodes, mults)
    return nodes


def _row_plan(text: str) -> dets.RowPlan:
    """``"0,1;0"`` -> groups (0, 1) and (0,)."""
    return dets.RowPlan(tuple(tuple(_ints(g)) for g in text.split(";")))


def _emit(obj, out) -> None:
    if isinstance(obj, dict):
        out.write(json.dumps(obj, indent=2) + "\n")
    else:
        out.write(json.dumps(obj, separators=(",", ":")) + "\n")


def _emit_csv(rows, out) -> None:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(rows)
    out.write(buf.getvalue())


def _poly_or_value(p: UniPoly, args):
    if args.x is not None:
        return fmt_rational(p(parse_rational(args.x)))
    return p.to_json()


# subcommands ----------------------------------------------------------------


def cmd_moments(args, out) -> int:
    spec = parse_measure(args.measure)
    values = moments(spec, args.upto)
    if args.format == "csv":
        _emit_csv([["k", "moment"]] + [[k, fmt_rational(v)] for k, v in enumerate(values)], out)
    else:
        _emit([fmt_rational(v) for v in values], out)
    return EXIT_OK


def cmd_poly(args, out) -> int:
    spec = parse_measure(args.measure)
    kind = args.kind
    if kind == "orth":
        p = orth_poly(spec, args.n)
    elif kind == "q":
        p = q_nodes(spec, _nodeset(args), args.n) if args.nodes else q_poly(spec, args.n)
    elif kind == "r":
        p = r_poly(spec, args.m, args.n)
    elif kind == "jensen":
        gs = JensenSeq.from_measure(spec, args.n + args.k)
        p = jensen(gs, args.n, args.k)
    elif kind == "classical":
        p = classical_poly(spec, args.n)
    elif kind == "q-closed":
        p = classical_q_closed(spec, args.n)
    else:
        p = dets.wronskian_poly(spec, args.n, args.m)
    _emit(_poly_or_value(p, args), out)
    return EXIT_OK


def _need(args, *names) -> None:
    missing = [f"--{n.replace('_', '-')}" for n in names if getattr(args, n) in (None, "")]
    if missing:
        raise OpdetError(f"det {args.kind} requires {', '.join(missing)}")


def cmd_det(args, out) -> int:
    spec = parse_measure(args.measure)
    kind = args.kind
    if kind == "slater":
        _need(args, "n", "nodes")
        value = dets.slater(spec, args.n, _rationals(args.nodes))
    elif kind == "general":
        _need(args, "n", "nodes")
        plan = _row_plan(args.plan) if args.plan else None
        value = dets.slater_general(spec, args.n, _nodeset(args), plan)
    elif kind == "symmetrized":
        _need(args, "n", "nodes")
        value = dets.symmetrized(spec, args.n, _nodeset(args))
    elif kind == "wronskian":
        _need(args, "n", "m", "x")
        value = dets.wronskian(spec, args.n, args.m, parse_rational(args.x))
    elif kind == "hankel-q":
        _need(args, "n", "nodes")
        value = dets.hankel_q_det(spec, args.n, _nodeset(args))
    elif kind == "hankel-r":
        _need(args, "n", "nodes")
        value = dets.hankel_r_det(spec, args.n, _nodeset(args))
    elif kind == "constant":
        _need(args, "n", "constant")
        mults = _ints(args.mults) if args.mults else args.m
        if mults is None:
            raise OpdetError("det constant requires --m or --mults")
        value = dets.structure_constant(args.constant, spec, args.n, mults, printed=args.printed).value
    elif kind == "f":
        _need(args, "indices", "x")
        value = dets.f_det(spec, _ints(args.indices), _nodeset(args), parse_rational(args.x))
    else:
        _need(args, "alpha", "nodes")
        value = dets.p_alpha(spec, _ints(args.alpha), _rationals(args.nodes))
    _emit(fmt_rational(value), out)
    return EXIT_OK


def _plan(args) -> SamplePlan:
    return SamplePlan(seed=args.seed, n_max=args.n_max, m_max=args.m_max)


def cmd_verify(args, out) -> int:
    plan = _plan(args)
    if args.all:
        specs = [parse_measure(args.measure)] if args.measure else None
        reports = verify_all(plan, specs)
        ok = all(r.passed for r in reports if not r.advisory)
        _emit({"status": "pass" if ok else "fail", "reports": [r.to_json() for r in reports]}, out)
        return EXIT_OK if ok else EXIT_FAIL
    identity = IdentityId.parse(args.id)
    if args.measure:
        reports = [verify_identity(identity, parse_measure(args.measure), plan)]
    else:
        reports = [verify_identity(identity, s, plan) for s in default_specs_for(identity)]
    ok = all(r.passed for r in reports)
    if len(reports) == 1:
        _emit(reports[0].to_json(), out)
    else:
        _emit({"status": "pass" if ok else "fail", "reports": [r.to_json() for r in reports]}, out)
    return EXIT_OK if ok else EXIT_FAIL


def cmd_scan(args, out) -> int:
    spec = parse_measure(args.measure)
    nodes = _rationals(args.nodes) if args.nodes else None
    rep = positivity_scan(spec, args.n, _ints(args.mults), args.trials, args.seed, nodes)
    _emit(rep.to_json(), out)
    return EXIT_OK if rep.passed else EXIT_FAIL


def cmd_jensen(args, out) -> int:
    spec = parse_measure(args.measure)
    table = jensen_convergence(spec, parse_rational(args.x), args.m_max)
    if args.format == "csv":
        _emit_csv(table.csv_rows(), out)
    else:
        _emit(table.to_json(), out)
    return EXIT_OK if table.passed else EXIT_FAIL


# parser ---------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="opdet",
        description="Exact determinants of orthogonal polynomials and identity verification.",
    )
    sub = p.add_subparsers(dest="command", required=True, metavar="<subcommand>")

    def measure(sp, required=True):
        sp.add_argument(
            "--measure",
            required=required,
            help="hermite | laguerre:alpha=r | gegenbauer:lambda=r | moments:r0,r1,... | modified(<spec>;t^m,...)",
        )

    s = sub.add_parser("moments", help="list moments mu_0..mu_upto")
    measure(s)
    s.add_argument("--upto", type=int, required=True)
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.set_defaults(func=cmd_moments)

    s = sub.add_parser("poly", help="build a polynomial (coefficients ascending)")
    s.add_argument("kind", choices=("orth", "q", "r", "jensen", "classical", "q-closed", "wronskian"))
    measure(s)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--m", type=int, default=1)
    s.add_argument("--k", type=int, default=0)
    s.add_argument("--nodes", help="nodes for q with several variables, e.g. 0,1/2^2")
    s.add_argument("--mults")
    s.add_argument("--x", help="evaluate at this rational instead of printing coefficients")
    s.set_defaults(func=cmd_poly)

    s = sub.add_parser("det", help="evaluate a determinant or structure constant")
    s.add_argument(
        "kind",
        choices=("slater", "general", "symmetrized", "wronskian", "hankel-q", "hankel-r", "constant", "f", "p-alpha"),
    )
    measure(s)
    s.add_argument("--n", type=int)
    s.add_argument("--m", type=int)
    s.add_argument("--nodes")
    s.add_argument("--mults")
    s.add_argument("--x")
    s.add_argument("--plan", help="row plan for 'general', groups separated by ';', e.g. 0,3;0")
    s.add_argument("--constant", choices=dets.KINDS, help="structure constant kind")
    s.add_argument("--printed", action="store_true", help="use the uncorrected factorial product")
    s.add_argument("--indices", help="F-determinant indices, e.g. 1,3,4")
    s.add_argument("--alpha", help="weakly increasing index vector for p-alpha")
    s.set_defaults(func=cmd_det)

    s = sub.add_parser("verify", help="check identities exactly")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--id", help=f"one of {', '.join(i.value for i in IdentityId)}")
    g.add_argument("--all", action="store_true")
    measure(s, required=False)
    s.add_argument("--n-max", type=int, default=3)
    s.add_argument("--m-max", type=int, default=3)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--format", choices=("json",), default="json")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("scan-positivity", help="sign scan of confluent Slater determinants, even multiplicities")
    measure(s)
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--mults", required=True)
    s.add_argument("--trials", type=int, default=50)
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.add_argument("--nodes", help="check this single node tuple instead of sampling")
    s.add_argument("--format", choices=("json",), default="json")
    s.set_defaults(func=cmd_scan)

    s = sub.add_parser("jensen-converge", help="g_m(x/m) against the Laplace transform")
    measure(s)
    s.add_argument("--x", required=True)
    s.add_argument("--m-max", type=int, default=64)
    s.add_argument("--format", choices=("json", "csv"), default="json")
    s.set_defaults(func=cmd_jensen)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args, sys.stdout)
    except OpdetError as exc:
        print(f"opdet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
