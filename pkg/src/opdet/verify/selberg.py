"""Brute-force Selberg-type integrals by moment contraction."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Optional, Sequence, Union

from ..errors import OpdetError
from ..exactcore import MultiPoly, UniPoly, as_rational
from ..measures import MeasureSpec, NodeSet, as_nodeset, moment, require_moments

SELBERG_N_CAP = 4


@lru_cache(maxsize=None)
def _vandermonde_squared(n: int) -> MultiPoly:
    out = MultiPoly.const(n, 1)
    s = [MultiPoly.var(i, n) for i in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            d = s[i] - s[j]
            out = out * d * d
    return out


def selberg_integral(
    spec: MeasureSpec,
    n: int,
    nodes: Union[NodeSet, Sequence] = (),
    extra_x=None,
    cap: int = SELBERG_N_CAP,
) -> Fraction:
    """(1/n!) * integral of prod_{i,j}(s_j - t_i)^{m_i} prod_{i<j}(s_i - s_j)^2 [prod_j (s_j - x)].

    The integrand is expanded in n variables and each monomial prod s_j^{a_j}
    is replaced by prod mu_{a_j}.
    """
    if n < 0:
        raise OpdetError("n must be non-negative")
    if n > cap:
        raise OpdetError(f"selberg_integral is capped at n = {cap}, got {n}")
    if n == 0:
        return Fraction(1)
    nodes = as_nodeset(nodes)
    factor = nodes.node_polynomial()
    if extra_x is not None:
        factor = factor * UniPoly((-as_rational(extra_x), 1))
    integrand = _vandermonde_squared(n)
    for j in range(n):
        integrand = integrand * MultiPoly.from_unipoly(factor, j, n)
    top = max((max(e) for e in integrand.terms), default=0)
    require_moments(spec, top)
    mu = [moment(spec, k) for k in range(top + 1)]
    return integrand.contract(mu) / factorial(n)
