"""Sign checks for confluent Slater determinants with even multiplicities."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..dets import slater_general, wronskian
from ..errors import DuplicateNodesError, OpdetError
from ..measures import MeasureSpec, NodeSet, format_measure
from .plan import DEFAULT_SEED, SamplePlan
from .report import VerifyReport

GRID = tuple(Fraction(k, 4) for k in range(-20, 21))


def _random_nodes(rng, r: int) -> tuple:
    nodes: list = []
    while len(nodes) < r:
        t = Fraction(rng.randint(-40, 40), rng.randint(1, 12))
        if t not in nodes:
            nodes.append(t)
    return tuple(nodes)


def positivity_scan(
    spec: MeasureSpec,
    n: int,
    mults: Sequence[int],
    trials: int = 50,
    seed: int = DEFAULT_SEED,
    nodes: Sequence | None = None,
) -> VerifyReport:
    """Assert S_n^{mults}(t) > 0 at seeded random distinct nodes.

    With a single node group the Wronskian is also checked for
    non-negativity on a fixed grid. Passing ``nodes`` checks that one tuple.
    """
    mults = tuple(int(v) for v in mults)
    if not mults or any(v < 2 or v % 2 for v in mults):
        raise OpdetError(f"multiplicities must be even and positive, got {mults}")
    plan = SamplePlan(seed=seed)
    rep = VerifyReport(
        "POSITIVITY",
        format_measure(spec),
        {"seed": seed, "ranges": {"n": n, "mults": list(mults), "trials": trials}},
    )
    if nodes is not None:
        ts = tuple(Fraction(v) for v in nodes)
        if len(set(ts)) != len(ts):
            raise DuplicateNodesError("positivity requires pairwise distinct nodes")
        tuples = [ts]
    else:
        rng = plan.rng("positivity", n, *mults)
        tuples = [_random_nodes(rng, len(mults)) for _ in range(trials)]
    for ts in tuples:
        value = slater_general(spec, n, NodeSet.of(ts, mults))
        rep.expect({"n": n, "nodes": list(ts), "mults": list(mults)}, value > 0, value, "> 0")
    if len(mults) == 1:
        m = mults[0]
        for x in GRID:
            value = wronskian(spec, n, m, x)
            rep.expect({"n": n, "m": m, "x": x, "grid": True}, value >= 0, value, ">= 0")
    return rep
