"""Scaled Jensen polynomials g_m(x/m) approaching the Laplace transform."""

from __future__ import annotations

from dataclasses import dataclass, field
from decimal import Context, Decimal
from fractions import Fraction
from typing import Optional

from ..dets import wronskian
from ..errors import OpdetError, UnsupportedSpecError
from ..exactcore import as_rational, det_exact, superfactorial
from ..measures import Explicit, Laguerre, MeasureSpec, format_measure, hankel_det, require_moments
from ..opoly import JensenSeq, jensen

_CTX = Context(prec=30)
WRONSKIAN_CHECK_UPTO = 6
LAPLACE_DET_ORDERS = (1, 2, 3)


def to_decimal(value: Fraction) -> Decimal:
    value = Fraction(value)
    return _CTX.divide(Decimal(value.numerator), Decimal(value.denominator))


def laplace_target(spec: MeasureSpec, x: Fraction) -> Optional[Decimal]:
    """Closed-form Laplace transform where one is registered."""
    if isinstance(spec, Laguerre):
        expo = -(spec.alpha + 1)
        if expo.denominator == 1:
            return to_decimal((1 + x) ** int(expo))
        return _CTX.power(to_decimal(1 + x), to_decimal(expo))
    return None


@dataclass
class ConvergenceRow:
    m: int
    value: Fraction
    target: Optional[Decimal]
    wronskian_ok: Optional[bool]

    @property
    def decimal(self) -> Decimal:
        return to_decimal(self.value)

    @property
    def error(self) -> Optional[Decimal]:
        if self.target is None:
            return None
        return abs(_CTX.subtract(self.decimal, self.target))

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "exact": str(self.value),
            "decimal": str(self.decimal),
            "target": None if self.target is None else str(self.target),
            "error": None if self.error is None else str(self.error),
            "wronskian_check": self.wronskian_ok,
        }


@dataclass
class ConvergenceTable:
    spec: str
    x: Fraction
    m_max: int
    rows: list
    laplace_dets: list = field(default_factory=list)

    def error_at(self, m: int) -> Optional[Decimal]:
        return self.rows[m - 1].error

    @property
    def trend_ok(self) -> Optional[bool]:
        """error(m_max) < error(m_max // 4); None without a registered target."""
        if self.rows[0].target is None or self.m_max < 4:
            return None
        late, early = self.error_at(self.m_max), self.error_at(self.m_max // 4)
        return late < early or late == 0

    @property
    def passed(self) -> bool:
        if self.trend_ok is False:
            return False
        if any(r.wronskian_ok is False for r in self.rows):
            return False
        return all(d["nonnegative"] for d in self.laplace_dets)

    def to_json(self) -> dict:
        return {
            "spec": self.spec,
            "x": str(self.x),
            "m_max": self.m_max,
            "rows": [r.to_json() for r in self.rows],
            "laplace_dets": [
                {**d, "value": str(d["value"]), "decimal": str(to_decimal(d["value"]))}
                for d in self.laplace_dets
            ],
            "trend_ok": self.trend_ok,
            "status": "pass" if self.passed else "fail",
        }

    def csv_rows(self) -> list:
        header = ["m", "exact", "decimal", "target", "error", "wronskian_check"]
        out = [header]
        for r in self.rows:
            j = r.to_json()
            out.append(["" if j[h] is None else str(j[h]) for h in header])
        return out


def _wronskian_form(spec: MeasureSpec, m: int, y: Fraction) -> Fraction:
    """y^m W(p_1, ..., p_m; 1/y) / prod_{k=1}^{m-1} k! det M_k."""
    denom = Fraction(superfactorial(m - 1))
    for k in range(1, m):
        denom *= hankel_det(spec, k)
    return y**m * wronskian(spec, 1, m, 1 / y) / denom


def jensen_convergence(spec: MeasureSpec, x, m_max: int) -> ConvergenceTable:
    """Tabulate g_m(x/m) for m = 1..m_max against the Laplace transform at x."""
    if not isinstance(spec, (Laguerre, Explicit)):
        raise UnsupportedSpecError("jensen_convergence needs a Laguerre or explicit Stieltjes spec")
    x = as_rational(x)
    if x < 0:
        raise OpdetError("x must be non-negative")
    if m_max < 1:
        raise OpdetError("m_max must be at least 1")
    require_moments(spec, m_max)
    gs = JensenSeq.from_measure(spec, m_max)
    target = laplace_target(spec, x)
    rows = []
    for m in range(1, m_max + 1):
        y = x / m
        value = jensen(gs, m)(y)
        check = None
        if m <= WRONSKIAN_CHECK_UPTO and y != 0:
            try:
                check = _wronskian_form(spec, m, y) == value
            except OpdetError:
                check = None
        rows.append(ConvergenceRow(m, value, target, check))

    laplace = []
    m = 2
    while m <= m_max:
        for n in LAPLACE_DET_ORDERS:
            try:
                require_moments(spec, m + 2 * (n - 1))
            except OpdetError:
                continue
            gk = JensenSeq.from_measure(spec, m + 2 * (n - 1))
            y = x / m
            value = det_exact([[jensen(gk, m, i + j)(y) for j in range(n)] for i in range(n)])
            laplace.append({"m": m, "n": n, "value": value, "nonnegative": value >= 0})
        m *= 2
    return ConvergenceTable(format_measure(spec), x, m_max, rows, laplace)
