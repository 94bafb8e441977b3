"""Moment sequences of classical, explicit and polynomially modified measures."""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator, Optional, Sequence, Union

from .errors import (
    DuplicateNodesError,
    InsufficientMomentsError,
    OpdetError,
    UnsupportedSpecError,
)
from .exactcore import UniPoly, as_rational, det_exact, fmt_rational, rising


@dataclass(frozen=True)
class NodeSet:
    """Nodes t_1..t_r with multiplicities m_1..m_r."""

    entries: tuple = ()

    def __post_init__(self):
        clean = []
        for entry in self.entries:
            node, mult = entry
            mult = int(mult)
            if mult < 1:
                raise OpdetError(f"multiplicity must be >= 1, got {mult}")
            clean.append((as_rational(node), mult))
        object.__setattr__(self, "entries", tuple(clean))

    @classmethod
    def simple(cls, nodes: Iterable) -> "NodeSet":
        return cls(tuple((t, 1) for t in nodes))

    @classmethod
    def of(cls, nodes: Iterable, mults: Iterable[int]) -> "NodeSet":
        nodes, mults = list(nodes), list(mults)
        if len(nodes) != len(mults):
            raise OpdetError("nodes and multiplicities differ in length")
        return cls(tuple(zip(nodes, mults)))

    @property
    def nodes(self) -> tuple:
        return tuple(t for t, _ in self.entries)

    @property
    def mults(self) -> tuple:
        return tuple(m for _, m in self.entries)

    @property
    def total_multiplicity(self) -> int:
        return sum(self.mults)

    def expanded(self) -> tuple:
        """Nodes repeated by multiplicity."""
        return tuple(t for t, m in self.entries for _ in range(m))

    def is_distinct(self) -> bool:
        return len(set(self.nodes)) == len(self.entries)

    def require_distinct(self) -> "NodeSet":
        if not self.is_distinct():
            raise DuplicateNodesError(f"nodes must be pairwise distinct: {self.to_text()}")
        return self

    def without_last(self) -> "NodeSet":
        return NodeSet(self.entries[:-1])

    def node_polynomial(self) -> UniPoly:
        """prod (t - t_i)^{m_i} as a polynomial in t."""
        return UniPoly.from_roots(self.expanded())

    def to_text(self) -> str:
        return ",".join(
            fmt_rational(t) + (f"^{m}" if m != 1 else "") for t, m in self.entries
        )

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator:
        return iter(self.entries)


@dataclass(frozen=True)
class Hermite:
    """w(x) = exp(-x^2)/sqrt(pi) on the real line, mu_0 = 1."""


@dataclass(frozen=True)
class Laguerre:
    """w(x) = x^alpha exp(-x)/Gamma(alpha+1) on [0, inf)."""

    alpha: Fraction = Fraction(0)

    def __post_init__(self):
        a = as_rational(self.alpha)
        if not a > -1:
            raise OpdetError(f"Laguerre requires alpha > -1, got {a}")
        object.__setattr__(self, "alpha", a)


@dataclass(frozen=True)
class Gegenbauer:
    """w(x) = c (1-x^2)^(lambda-1/2) on [-1, 1], mu_0 = 1."""

    lam: Fraction = Fraction(1, 2)

    def __post_init__(self):
        lam = as_rational(self.lam)
        if not lam > Fraction(-1, 2):
            raise OpdetError(f"Gegenbauer requires lambda > -1/2, got {lam}")
        object.__setattr__(self, "lam", lam)


@dataclass(frozen=True)
class Explicit:
    """A finite list mu_0..mu_{N-1}; never extrapolated."""

    moments: tuple = field(default=())

    def __post_init__(self):
        mom = tuple(as_rational(v) for v in self.moments)
        if not mom:
            raise OpdetError("explicit measure needs at least one moment")
        object.__setattr__(self, "moments", mom)


@dataclass(frozen=True)
class Modified:
    """(t - t_1)^{m_1} ... (t - t_r)^{m_r} d base(t); possibly signed."""

    base: "MeasureSpec"
    nodes: NodeSet

    def __post_init__(self):
        if not isinstance(self.nodes, NodeSet):
            object.__setattr__(self, "nodes", NodeSet(tuple(self.nodes)))


MeasureSpec = Union[Hermite, Laguerre, Gegenbauer, Explicit, Modified]
CLASSICAL = (Hermite, Laguerre, Gegenbauer)


def max_moment_index(spec: MeasureSpec) -> Optional[int]:
    """Largest available moment index, or None when unbounded."""
    if isinstance(spec, Explicit):
        return len(spec.moments) - 1
    if isinstance(spec, Modified):
        inner = max_moment_index(spec.base)
        return None if inner is None else inner - spec.nodes.total_multiplicity
    return None


def require_moments(spec: MeasureSpec, k: int) -> None:
    top = max_moment_index(spec)
    if top is not None and k > top:
        raise InsufficientMomentsError(k, top)


@lru_cache(maxsize=None)
def _node_coeffs(nodes: NodeSet) -> tuple:
    return nodes.node_polynomial().coeffs


@lru_cache(maxsize=None)
def moment(spec: MeasureSpec, k: int) -> Fraction:
    """Exact k-th moment."""
    if k < 0:
        raise OpdetError("moment index must be non-negative")
    if isinstance(spec, Hermite):
        if k % 2:
            return Fraction(0)
        h = k // 2
        return Fraction(factorial(k), 2**k * factorial(h))
    if isinstance(spec, Laguerre):
        return rising(spec.alpha + 1, k)
    if isinstance(spec, Gegenbauer):
        if k % 2:
            return Fraction(0)
        h = k // 2
        return rising(Fraction(1, 2), h) / rising(spec.lam + 1, h)
    if isinstance(spec, Explicit):
        if k >= len(spec.moments):
            raise InsufficientMomentsError(k, len(spec.moments) - 1)
        return spec.moments[k]
    if isinstance(spec, Modified):
        coeffs = _node_coeffs(spec.nodes)
        require_moments(spec.base, k + len(coeffs) - 1)
        return sum(
            (c * moment(spec.base, k + j) for j, c in enumerate(coeffs) if c),
            Fraction(0),
        )
    raise UnsupportedSpecError(f"unknown measure spec {spec!r}")


def moments(spec: MeasureSpec, upto: int) -> list:
    return [moment(spec, k) for k in range(upto + 1)]


def hankel_matrix(spec: MeasureSpec, n: int) -> list:
    """M_n = [mu_{i+j}]_{i,j=0}^{n}."""
    if n < 0:
        return []
    require_moments(spec, 2 * n)
    mu = [moment(spec, k) for k in range(2 * n + 1)]
    return [[mu[i + j] for j in range(n + 1)] for i in range(n + 1)]


@lru_cache(maxsize=None)
def hankel_det(spec: MeasureSpec, n: int) -> Fraction:
    """det M_n, with det M_{-1} = 1."""
    if n < 0:
        return Fraction(1)
    return det_exact(hankel_matrix(spec, n))


@dataclass(frozen=True)
class ValidationReport:
    spec: str
    order: int
    dets: tuple
    first_nonpositive: Optional[int]

    @property
    def positive_definite(self) -> bool:
        return self.first_nonpositive is None

    def to_json(self) -> dict:
        return {
            "spec": self.spec,
            "order": self.order,
            "dets": [fmt_rational(d) for d in self.dets],
            "first_nonpositive": self.first_nonpositive,
            "positive_definite": self.positive_definite,
        }


def validate_measure(spec: MeasureSpec, order: int) -> ValidationReport:
    """Report det M_k for k = 0..order and flag the first non-positive one.

    Signed (modified) measures legitimately fail; that is reported, not raised.
    """
    require_moments(spec, 2 * order)
    dets = tuple(hankel_det(spec, k) for k in range(order + 1))
    bad = next((k for k, d in enumerate(dets) if d <= 0), None)
    return ValidationReport(format_measure(spec), order, dets, bad)


def closed_form_hankel_det(spec: MeasureSpec, n: int) -> Fraction:
    """Product formulas for det M_n of the three classical weights."""
    out = Fraction(1)
    if isinstance(spec, Hermite):
        for k in range(1, n + 1):
            out *= Fraction(factorial(k), 2**k)
        return out
    if isinstance(spec, Laguerre):
        for k in range(1, n + 1):
            out *= factorial(k) * rising(spec.alpha + 1, k)
        return out
    if isinstance(spec, Gegenbauer):
        lam = spec.lam
        out = lam**n / rising(lam + 1, n)
        for k in range(1, n + 1):
            out *= rising(2 * lam, k) * factorial(k) / (rising(lam, k) ** 2 * 4**k)
        return out
    raise UnsupportedSpecError("closed-form Hankel determinant exists only for classical families")


# text grammar ---------------------------------------------------------------

_PARAM = re.compile(r"^(laguerre|gegenbauer):(alpha|lambda)=(.+)$")


def _split_top(text: str, sep: str) -> list:
    parts, depth, start = [], 0, 0
    for i, ch in enumerate(text):
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        elif ch == sep and depth == 0:
            parts.append(text[start:i])
            start = i + 1
    parts.append(text[start:])
    return parts


def parse_nodes(text: str) -> NodeSet:
    """``"0,1/2^2,-1"`` -> NodeSet((0,1), (1/2,2), (-1,1))."""
    entries = []
    for item in text.split(","):
        item = item.strip()
        if not item:
            raise OpdetError(f"empty node in {text!r}")
        node, _, mult = item.partition("^")
        entries.append((as_rational(node), int(mult) if mult else 1))
    return NodeSet(tuple(entries))


def parse_measure(text: str) -> MeasureSpec:
    """Parse the measure grammar used on the command line."""
    s = text.strip()
    low = s.lower()
    if low == "hermite":
        return Hermite()
    m = _PARAM.match(low)
    if m:
        family, param, value = m.groups()
        if (family, param) == ("laguerre", "alpha"):
            return Laguerre(as_rational(value))
        if (family, param) == ("gegenbauer", "lambda"):
            return Gegenbauer(as_rational(value))
        raise OpdetError(f"parameter {param!r} does not belong to {family}")
    if low.startswith("moments:"):
        body = s[len("moments:"):]
        return Explicit(tuple(as_rational(v) for v in body.split(",")))
    if low.startswith("modified(") and s.endswith(")"):
        inner = s[len("modified("):-1]
        parts = _split_top(inner, ";")
        if len(parts) != 2:
            raise OpdetError(f"modified(...) needs '<spec>;<nodes>': {text!r}")
        return Modified(parse_measure(parts[0]), parse_nodes(parts[1]))
    raise OpdetError(f"unrecognized measure spec {text!r}")


def format_measure(spec: MeasureSpec) -> str:
    if isinstance(spec, Hermite):
        return "hermite"
    if isinstance(spec, Laguerre):
        return f"laguerre:alpha={fmt_rational(spec.alpha)}"
    if isinstance(spec, Gegenbauer):
        return f"gegenbauer:lambda={fmt_rational(spec.lam)}"
    if isinstance(spec, Explicit):
        return "moments:" + ",".join(fmt_rational(v) for v in spec.moments)
    if isinstance(spec, Modified):
        return f"modified({format_measure(spec.base)};{spec.nodes.to_text()})"
    raise UnsupportedSpecError(f"unknown measure spec {spec!r}")


def as_nodeset(nodes: Union[NodeSet, Sequence]) -> NodeSet:
    if isinstance(nodes, NodeSet):
        return nodes
    return NodeSet.simple(nodes)
