"""Deterministic sampling of parameters, node tuples and evaluation points."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations
from math import perm
from typing import Iterator

from ..errors import PlanInfeasibleError

DEFAULT_SEED = 20240611

F = Fraction
DEFAULT_POOL = (F(0), F(1), F(-1), F(1, 2), F(-1, 2), F(1, 3), F(-1, 3), F(2), F(5, 2), F(-3))
EXTENDED_POOL = DEFAULT_POOL + (
    F(3), F(-2), F(1, 4), F(-1, 4), F(3, 2), F(-3, 2), F(2, 3), F(-2, 3), F(1, 5), F(7, 3),
)


@dataclass(frozen=True)
class SamplePlan:
    seed: int = DEFAULT_SEED
    pool: tuple = DEFAULT_POOL
    n_max: int = 3
    m_max: int = 3
    r_max: int = 3
    mult_total_max: int = 4
    tuples_per_case: int = 20
    tuples_small: int = 4
    extended_pool: tuple = field(default=EXTENDED_POOL)

    def rng(self, *salt) -> random.Random:
        # string seeds hash through sha512, so this is stable across runs and platforms
        return random.Random(":".join(str(s) for s in (self.seed,) + salt))

    def node_tuples(self, k: int, count: int, *salt) -> list:
        """``count`` distinct ordered k-tuples of pairwise distinct nodes.

        Falls back to the extended pool when the base pool has too few tuples.
        """
        if k == 0:
            return [()]
        pool = self.pool
        if len(pool) < k or perm(len(pool), k) < count:
            pool = pool + tuple(v for v in self.extended_pool if v not in pool)
        if len(pool) < k:
            raise PlanInfeasibleError(f"node pool too small for {k} distinct nodes")
        rng = self.rng("nodes", k, *salt)
        return rng.sample(list(permutations(pool, k)), min(count, perm(len(pool), k)))

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "ranges": {
                "n_max": self.n_max,
                "m_max": self.m_max,
                "r_max": self.r_max,
                "mult_total_max": self.mult_total_max,
                "tuples_per_case": self.tuples_per_case,
                "tuples_small": self.tuples_small,
            },
            "pool": [str(v) for v in self.pool],
        }


def compositions(total_max: int, r_max: int) -> Iterator[tuple]:
    """Ordered multiplicity vectors with 1 <= r <= r_max parts and sum <= total_max."""

    def rec(prefix: tuple, left: int):
        if prefix:
            yield prefix
        if len(prefix) == r_max:
            return
        for v in range(1, left + 1):
            yield from rec(prefix + (v,), left - v)

    yield from sorted(rec((), total_max), key=lambda c: (sum(c), len(c), c))


def eval_points(count: int) -> list:
    """``count`` distinct rationals, enough to pin a polynomial of degree count - 1."""
    return [Fraction(2 * i - count, 3) + Fraction(1, 7) for i in range(count)]
