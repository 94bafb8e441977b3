"""Orthogonal polynomials from moments, shifted-moment polynomials and Jensen polynomials."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial
from typing import Sequence, Union

from .errors import (
    DegenerateMeasureError,
    InsufficientMomentsError,
    OpdetError,
    UnsupportedSpecError,
)
from .exactcore import UniPoly, as_rational, det_exact, rising
from .measures import (
    Gegenbauer,
    Hermite,
    Laguerre,
    MeasureSpec,
    Modified,
    NodeSet,
    as_nodeset,
    hankel_det,
    moment,
    require_moments,
)


@lru_cache(maxsize=None)
def orth_poly(spec: MeasureSpec, n: int) -> UniPoly:
    """p_n as the bordered moment determinant; leading coefficient det M_{n-1}.

    The last row of the bordered matrix is (1, x, ..., x^n), so expanding along
    it gives the coefficient of x^j as a signed n x n moment minor.
    """
    if n < 0:
        raise OpdetError("degree must be non-negative")
    if n == 0:
        return UniPoly.const(1)
    require_moments(spec, 2 * n - 1)
    if hankel_det(spec, n - 1) == 0:
        raise DegenerateMeasureError(f"det M_{n - 1} vanishes; p_{n} is not defined")
    mu = [moment(spec, k) for k in range(2 * n)]
    rows = [[mu[i + j] for j in range(n + 1)] for i in range(n)]
    coeffs = []
    for j in range(n + 1):
        minor = [row[:j] + row[j + 1:] for row in rows]
        sign = -1 if (n + j) % 2 else 1
        coeffs.append(sign * det_exact(minor))
    return UniPoly(coeffs)


def integrate(spec: MeasureSpec, p: UniPoly) -> Fraction:
    """Integral of p against the measure, as a moment contraction."""
    return sum((c * moment(spec, k) for k, c in enumerate(p.coeffs) if c), Fraction(0))


def monic(p: UniPoly) -> UniPoly:
    if p.is_zero():
        raise OpdetError("the zero polynomial has no monic form")
    return p / p.leading


def orthonormal_scale_squared(spec: MeasureSpec, n: int) -> Fraction:
    """||p_n||^2 = det M_{n-1} det M_n; divide p_n by its square root to normalize."""
    return hankel_det(spec, n - 1) * hankel_det(spec, n)


@lru_cache(maxsize=None)
def q_poly(spec: MeasureSpec, n: int) -> UniPoly:
    """q_n(x) = integral of (t - x)^n."""
    require_moments(spec, n)
    return UniPoly(moment(spec, n - j) * comb(n, j) * (-1) ** j for j in range(n + 1))


@lru_cache(maxsize=None)
def r_poly(spec: MeasureSpec, m: int, n: int) -> UniPoly:
    """r_{m,n}(x) = integral of t^n (t - x)^m; degree m in x."""
    require_moments(spec, n + m)
    return UniPoly(moment(spec, n + m - j) * comb(m, j) * (-1) ** j for j in range(m + 1))


def _modified(spec: MeasureSpec, nodes) -> MeasureSpec:
    nodes = as_nodeset(nodes)
    return Modified(spec, nodes) if len(nodes) else spec


def q_nodes(spec: MeasureSpec, nodes: Union[NodeSet, Sequence], n: int) -> UniPoly:
    """q_n(t_1, ..., t_m; x) = integral of (s - x)^n prod (s - t_i)^{m_i}."""
    return q_poly(_modified(spec, nodes), n)


def r_value(spec: MeasureSpec, nodes: Union[NodeSet, Sequence], n: int) -> Fraction:
    """r_n(t_1, ..., t_m) = n-th moment of the modified measure."""
    return moment(_modified(spec, nodes), n)


# Jensen polynomials ---------------------------------------------------------


@dataclass(frozen=True)
class JensenSeq:
    """Maclaurin data gamma_k of psi(x) = sum gamma_k x^k / k!."""

    gammas: tuple

    def __post_init__(self):
        g = tuple(as_rational(v) for v in self.gammas)
        if not g:
            raise OpdetError("a Jensen sequence needs at least one coefficient")
        object.__setattr__(self, "gammas", g)

    @classmethod
    def from_measure(cls, spec: MeasureSpec, upto: int) -> "JensenSeq":
        """Laplace-transform data: gamma_k = (-1)^k mu_k."""
        require_moments(spec, upto)
        return cls(tuple((-1) ** k * moment(spec, k) for k in range(upto + 1)))

    def __len__(self) -> int:
        return len(self.gammas)


def jensen(gs: JensenSeq, n: int, k: int = 0) -> UniPoly:
    """g_{n,k}(x) = sum_j C(n,j) gamma_{k+j} x^j."""
    if n < 0 or k < 0:
        raise OpdetError("Jensen indices must be non-negative")
    if n + k >= len(gs):
        raise InsufficientMomentsError(n + k, len(gs) - 1)
    return UniPoly(comb(n, j) * gs.gammas[k + j] for j in range(n + 1))


@dataclass(frozen=True)
class BridgeEvidence:
    g_n: UniPoly
    from_q: UniPoly
    g_nk: UniPoly
    from_r: UniPoly

    @property
    def equal(self) -> bool:
        return self.g_n == self.from_q and self.g_nk == self.from_r


def jensen_qr_bridge(spec: MeasureSpec, n: int, k: int) -> BridgeEvidence:
    """Compare g_n with (-x)^n q_n(1/x) and g_{n,k} with (-1)^{n+k} x^n r_{n,k}(1/x)."""
    gs = JensenSeq.from_measure(spec, n + k)
    from_q = q_poly(spec, n).reversed(n + 1) * (-1) ** n
    from_r = r_poly(spec, n, k).reversed(n + 1) * (-1) ** (n + k)
    return BridgeEvidence(jensen(gs, n), from_q, jensen(gs, n, k), from_r)


# classical families ---------------------------------------------------------


def hermite_poly(n: int) -> UniPoly:
    """H_n with leading coefficient 2^n."""
    out = [Fraction(0)] * (n + 1)
    for k in range(n // 2 + 1):
        out[n - 2 * k] = Fraction((-1) ** k * factorial(n) * 2 ** (n - 2 * k), factorial(k) * factorial(n - 2 * k))
    return UniPoly(out)


def laguerre_poly(n: int, beta) -> UniPoly:
    """L_n^(beta) by its terminating sum; valid for every rational beta."""
    beta = as_rational(beta)
    return UniPoly(
        rising(beta + j + 1, n - j) / factorial(n - j) * Fraction((-1) ** j, factorial(j))
        for j in range(n + 1)
    )


def gegenbauer_poly(n: int, lam) -> UniPoly:
    """C_n^lam by its explicit sum; valid for every rational lam."""
    lam = as_rational(lam)
    out = [Fraction(0)] * (n + 1)
    for k in range(n // 2 + 1):
        d = n - 2 * k
        out[d] = (-1) ** k * rising(lam, n - k) * 2**d / (factorial(k) * factorial(d))
    return UniPoly(out)


def gegenbauer_gamma(n: int, lam) -> Fraction:
    """Leading coefficient (lam)_n 2^n / n! of C_n^lam."""
    return rising(lam, n) * 2**n / factorial(n)


def classical_poly(family: MeasureSpec, n: int) -> UniPoly:
    """H_n, L_n^alpha or C_n^lambda in the classical normalization."""
    if isinstance(family, Hermite):
        return hermite_poly(n)
    if isinstance(family, Laguerre):
        return laguerre_poly(n, family.alpha)
    if isinstance(family, Gegenbauer):
        if family.lam == 0:
            raise UnsupportedSpecError("Gegenbauer lambda = 0 has no closed form in this normalization")
        return gegenbauer_poly(n, family.lam)
    raise UnsupportedSpecError(f"{family!r} is not a classical family")


def classical_q_closed(family: MeasureSpec, n: int) -> UniPoly:
    """Closed-form q_n for the classical families, in rational arithmetic."""
    if isinstance(family, Hermite):
        # i^n H_n(ix) / 2^n: the coefficient of x^d picks up i^(n+d), and n+d is even
        h = hermite_poly(n).coeffs
        return UniPoly(
            c * (-1) ** ((n + d) // 2) / 2**n if c else 0 for d, c in enumerate(h)
        )
    if isinstance(family, Laguerre):
        lag = laguerre_poly(n, -n - family.alpha - 1).scale_arg(-1)
        return lag * ((-1) ** n * factorial(n))
    if isinstance(family, Gegenbauer):
        if family.lam == 0:
            raise UnsupportedSpecError("Gegenbauer lambda = 0 has no closed form in this normalization")
        lam = family.lam
        return gegenbauer_poly(n, -n - lam) * (Fraction(factorial(n), 2**n) / rising(lam + 1, n))
    raise UnsupportedSpecError(f"{family!r} is not a classical family")
