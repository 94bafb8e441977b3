"""Slater, confluent Slater, Wronskian, Hankel and F-determinants, plus structure constants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence, Union

from .errors import (
    DegenerateMeasureError,
    DuplicateNodesError,
    MalformedPlanError,
    OpdetError,
)
from .exactcore import UniPoly, as_rational, det_exact, elem_sym, superfactorial, vandermonde
from .measures import MeasureSpec, Modified, NodeSet, as_nodeset, hankel_det
from .opoly import orth_poly, q_nodes, r_poly, r_value


@dataclass(frozen=True)
class RowPlan:
    """Derivative orders per node; one group per NodeSet entry."""

    groups: tuple

    def __post_init__(self):
        groups = tuple(tuple(g) for g in self.groups)
        for g in groups:
            if not g:
                raise MalformedPlanError("a row group must not be empty")
            for d in g:
                if not isinstance(d, int) or isinstance(d, bool) or d < 0:
                    raise MalformedPlanError(f"derivative order must be a non-negative int, got {d!r}")
        object.__setattr__(self, "groups", groups)

    @classmethod
    def standard(cls, mults: Sequence[int]) -> "RowPlan":
        return cls(tuple(tuple(range(m)) for m in mults))

    @classmethod
    def gapped(cls, m: int, k: int) -> "RowPlan":
        """One node with rows of order 0..m-1 followed by order k."""
        return cls((tuple(range(m)) + (k,),))

    @property
    def order(self) -> int:
        return sum(len(g) for g in self.groups)


@lru_cache(maxsize=None)
def _pd(spec: MeasureSpec, k: int, d: int) -> UniPoly:
    return orth_poly(spec, k).derivative(d)


def slater(spec: MeasureSpec, n: int, nodes: Sequence) -> Fraction:
    """det[p_{n+j-1}(t_i)]_{i,j=1}^m."""
    ts = [as_rational(t) for t in nodes]
    if not ts:
        raise OpdetError("slater needs at least one node")
    m = len(ts)
    return det_exact([[orth_poly(spec, n + j)(t) for j in range(m)] for t in ts])


def slater_general(
    spec: MeasureSpec, n: int, nodes: Union[NodeSet, Sequence], plan: RowPlan | None = None
) -> Fraction:
    """Row (t_i, d) is (p_n^(d)(t_i), ..., p_{n+M-1}^(d)(t_i)), M the plan's row count."""
    nodes = as_nodeset(nodes).require_distinct()
    if plan is None:
        plan = RowPlan.standard(nodes.mults)
    if len(plan.groups) != len(nodes):
        raise MalformedPlanError(
            f"plan has {len(plan.groups)} groups for {len(nodes)} nodes"
        )
    size = plan.order
    rows = []
    for (t, _), group in zip(nodes, plan.groups):
        for d in group:
            rows.append([_pd(spec, n + j, d)(t) for j in range(size)])
    return det_exact(rows)


def cross_factor(nodes: Union[NodeSet, Sequence]) -> Fraction:
    """prod_{i<j} (t_j - t_i)^{m_i m_j}."""
    entries = as_nodeset(nodes).entries
    out = Fraction(1)
    for j, (tj, mj) in enumerate(entries):
        for ti, mi in entries[:j]:
            out *= (tj - ti) ** (mi * mj)
    return out


def symmetrized(spec: MeasureSpec, n: int, nodes: Union[NodeSet, Sequence]) -> Fraction:
    """Continuous extension of S / prod (t_j - t_i)^{m_i m_j}.

    Derivative rows enter as p^(d)/d!, so a confluent group of multiplicity m_i
    contributes a factor 1/sf(m_i - 1) relative to the plain determinant.
    """
    nodes = as_nodeset(nodes).require_distinct()
    scale = 1
    for m in nodes.mults:
        scale *= superfactorial(m - 1)
    return slater_general(spec, n, nodes) / (scale * cross_factor(nodes))


def wronskian(spec: MeasureSpec, n: int, m: int, x) -> Fraction:
    """W(p_n, ..., p_{n+m-1}; x) = det[p_{n+j}^(i)(x)]."""
    x = as_rational(x)
    return det_exact([[_pd(spec, n + j, i)(x) for j in range(m)] for i in range(m)])


def wronskian_poly(spec: MeasureSpec, n: int, m: int) -> UniPoly:
    return det_exact([[_pd(spec, n + j, i) for j in range(m)] for i in range(m)])


# Hankel forms -----------------------------------------------------------------


def hankel_q_det(spec: MeasureSpec, n: int, nodes: Union[NodeSet, Sequence]) -> Fraction:
    """det[q_{i+j+m_r}(t_1^{m_1}, ..., t_{r-1}^{m_{r-1}}; t_r)]_{i,j<n}."""
    nodes = as_nodeset(nodes)
    if not len(nodes):
        raise OpdetError("the q form needs at least one node")
    t_last, m_last = nodes.entries[-1]
    prefix = nodes.without_last()
    return det_exact(
        [[q_nodes(spec, prefix, i + j + m_last)(t_last) for j in range(n)] for i in range(n)]
    )


def hankel_r_det(spec: MeasureSpec, n: int, nodes: Union[NodeSet, Sequence]) -> Fraction:
    """det[r_{i+j}(all nodes)]_{i,j<n}."""
    nodes = as_nodeset(nodes)
    return det_exact([[r_value(spec, nodes, i + j) for j in range(n)] for i in range(n)])


def hankel_q_poly(
    spec: MeasureSpec, n: int, m: int, prefix: Union[NodeSet, Sequence] = ()
) -> UniPoly:
    """det[q_{m+i+j}(prefix; x)] as a polynomial in x."""
    return det_exact([[q_nodes(spec, prefix, m + i + j) for j in range(n)] for i in range(n)])


def hankel_r_poly(
    spec: MeasureSpec, n: int, m: int, prefix: Union[NodeSet, Sequence] = ()
) -> UniPoly:
    """det[r_{i+j}(prefix, x^m)] as a polynomial in x."""
    prefix = as_nodeset(prefix)
    base = Modified(spec, prefix) if len(prefix) else spec
    return det_exact([[r_poly(base, m, i + j) for j in range(n)] for i in range(n)])


# structure constants --------------------------------------------------------

KINDS = ("B", "C", "Bvec", "Cvec")


@dataclass(frozen=True)
class StructureConstant:
    kind: str
    n: int
    mults: tuple
    value: Fraction
    printed: bool = False


def structure_constant(
    kind: str, spec: MeasureSpec, n: int, mults: Union[int, Sequence[int]], printed: bool = False
) -> StructureConstant:
    """B_{n,m}, C_{n,m}, B_n^{m_1..m_r} or C_n^{m_1..m_r}.

    ``mults`` is either m or the multiplicity vector. For the vector kinds the
    factor per node is sf(m_i - 1); ``printed=True`` uses sf(m_i) instead,
    which is kept only to demonstrate that it is wrong.
    """
    if kind not in KINDS:
        raise OpdetError(f"unknown structure constant kind {kind!r}; expected one of {KINDS}")
    mults = (1,) * mults if isinstance(mults, int) else tuple(int(v) for v in mults)
    if any(v < 1 for v in mults):
        raise OpdetError("multiplicities must be positive")
    m = sum(mults)

    def dets(upto: int) -> Fraction:
        out = Fraction(1)
        for k in range(1, upto + 1):
            d = hankel_det(spec, k + n - 1)
            if d == 0:
                raise DegenerateMeasureError(f"det M_{k + n - 1} vanishes")
            out *= d
        return out

    def node_factor() -> int:
        out = 1
        for v in mults:
            out *= superfactorial(v if printed else v - 1)
        return out

    if kind == "B":
        value = (-1) ** (n * m) * dets(m - 1)
    elif kind == "C":
        value = (-1) ** (n * m) * superfactorial(m - 1) * dets(m - 1)
    elif kind == "Bvec":
        value = (-1) ** (n * (m + 1)) * node_factor() * dets(m)
    else:
        value = (-1) ** (n * m) * node_factor() * dets(m - 1)
    return StructureConstant(kind, n, mults, Fraction(value), printed)


# F-determinants and P_alpha -----------------------------------------------


def f_det_poly(
    spec: MeasureSpec, indices: Sequence[int], nodes: Union[NodeSet, Sequence] = ()
) -> UniPoly:
    """F[q_l1, ..., q_ln](nodes; x) = det[q_{l_i + j - 1}(nodes; x)] as a polynomial in x."""
    ls = list(indices)
    if any(l < 1 for l in ls):
        raise OpdetError("F-determinant indices must be positive")
    n = len(ls)
    return det_exact([[q_nodes(spec, nodes, ls[i] + j) for j in range(n)] for i in range(n)])


def f_det(spec: MeasureSpec, indices: Sequence[int], nodes: Union[NodeSet, Sequence], x) -> Fraction:
    ls = list(indices)
    if any(l < 1 for l in ls):
        raise OpdetError("F-determinant indices must be positive")
    x = as_rational(x)
    n = len(ls)
    return det_exact([[q_nodes(spec, nodes, ls[i] + j)(x) for j in range(n)] for i in range(n)])


def p_alpha(spec: MeasureSpec, alpha: Sequence[int], nodes: Sequence) -> Fraction:
    """det[p_{alpha_i + i - 1}(t_j)] / V(t) for weakly increasing alpha."""
    alpha = [int(a) for a in alpha]
    ts = [as_rational(t) for t in nodes]
    if len(alpha) != len(ts):
        raise OpdetError("alpha and nodes differ in length")
    if not alpha or alpha[0] < 0 or any(b < a for a, b in zip(alpha, alpha[1:])):
        raise OpdetError(f"alpha must be non-negative and weakly increasing, got {alpha}")
    if len(set(ts)) != len(ts):
        raise DuplicateNodesError("nodes must be pairwise distinct")
    m = len(ts)
    mat = [[orth_poly(spec, alpha[i] + i)(ts[j]) for j in range(m)] for i in range(m)]
    return det_exact(mat) / vandermonde(ts)


def alpha_coordinates(nodes: Sequence) -> tuple:
    """(sigma_1, ..., sigma_m) of the nodes."""
    ts = [as_rational(t) for t in nodes]
    return tuple(elem_sym(k, ts) for k in range(1, len(ts) + 1))


__all__ = [
    "RowPlan",
    "StructureConstant",
    "alpha_coordinates",
    "cross_factor",
    "f_det",
    "f_det_poly",
    "hankel_q_det",
    "hankel_q_poly",
    "hankel_r_det",
    "hankel_r_poly",
    "p_alpha",
    "slater",
    "slater_general",
    "structure_constant",
    "symmetrized",
    "wronskian",
    "wronskian_poly",
]
