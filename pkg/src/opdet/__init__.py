"""Exact Slater, Wronskian and Hankel determinants of orthogonal polynomials."""

from .errors import OpdetError
from .exactcore import MultiPoly, UniPoly, det_exact
from .measures import (
    Explicit,
    Gegenbauer,
    Hermite,
    Laguerre,
    Modified,
    NodeSet,
    format_measure,
    hankel_det,
    moment,
    parse_measure,
)

__all__ = [
    "Explicit",
    "Gegenbauer",
    "Hermite",
    "Laguerre",
    "Modified",
    "MultiPoly",
    "NodeSet",
    "OpdetError",
    "UniPoly",
    "det_exact",
    "format_measure",
    "hankel_det",
    "moment",
    "parse_measure",
]

__version__ = "0.1.0"
