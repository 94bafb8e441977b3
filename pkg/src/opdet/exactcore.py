"""Exact scalars, polynomials and determinants.

Scalars are :class:`fractions.Fraction`. ``UniPoly`` is a dense univariate
polynomial with rational coefficients, ``MultiPoly`` a sparse polynomial in a
fixed number of variables. Both are immutable and hashable.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import product as _cartesian
from math import lcm
from numbers import Rational
from typing import Iterable, Mapping, Sequence, Union

from .errors import ArityError, NonSquareError, OpdetError

Number = Union[int, Fraction]


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"not an exact rational: {value!r}")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p/q"``, ``"p"`` or a finite decimal such as ``"0.5"``."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise OpdetError(f"bad rational literal {text!r}") from exc


def fmt_rational(value: Number) -> str:
    """Serialize as ``"p/q"`` in lowest terms, or ``"p"`` when q = 1."""
    return str(Fraction(value))


class UniPoly:
    """Univariate polynomial, coefficients in ascending degree.

    The zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Iterable = ()):
        c = [as_rational(v) for v in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self._c = tuple(c)

    @classmethod
    def _raw(cls, coeffs: tuple) -> "UniPoly":
        obj = cls.__new__(cls)
        obj._c = coeffs
        return obj

    @classmethod
    def const(cls, value) -> "UniPoly":
        return cls((value,))

    @classmethod
    def x(cls) -> "UniPoly":
        return cls((0, 1))

    @classmethod
    def monomial(cls, degree: int, coeff=1) -> "UniPoly":
        return cls([0] * degree + [coeff])

    @classmethod
    def from_roots(cls, roots: Iterable) -> "UniPoly":
        p = cls.const(1)
        for r in roots:
            p = p * cls((-as_rational(r), 1))
        return p

    @property
    def coeffs(self) -> tuple:
        return self._c

    @property
    def degree(self) -> int:
        return len(self._c) - 1

    @property
    def leading(self) -> Fraction:
        return self._c[-1] if self._c else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self._c[k] if 0 <= k < len(self._c) else Fraction(0)

    def is_zero(self) -> bool:
        return not self._c

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == UniPoly.const(other)._c
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("UniPoly", self._c))

    def __repr__(self) -> str:
        return f"UniPoly([{', '.join(fmt_rational(c) for c in self._c)}])"

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for k, c in enumerate(self._c):
            if c == 0:
                continue
            mono = "" if k == 0 else ("x" if k == 1 else f"x^{k}")
            if mono and c == 1:
                parts.append(mono)
            elif mono and c == -1:
                parts.append("-" + mono)
            else:
                parts.append(fmt_rational(c) + ("*" + mono if mono else ""))
        return " + ".join(parts).replace("+ -", "- ")

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return UniPoly.const(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._c, other._c
        if len(a) < len(b):
            a, b = b, a
        return UniPoly(tuple(a[i] + b[i] if i < len(b) else a[i] for i in range(len(a))))

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly._raw(tuple(-c for c in self._c))

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly(tuple(c * other for c in self._c))
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if not self._c or not other._c:
            return UniPoly()
        out = [Fraction(0)] * (len(self._c) + len(other._c) - 1)
        for i, a in enumerate(self._c):
            if a == 0:
                continue
            for j, b in enumerate(other._c):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative power")
        result, base = UniPoly.const(1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return UniPoly(tuple(c / other for c in self._c))
        return self.exact_div(other)

    def __divmod__(self, other: "UniPoly"):
        other = self._coerce(other)
        if not other._c:
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self._c)
        dq = other.degree
        lead = other.leading
        quot = [Fraction(0)] * max(len(rem) - dq, 0)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            if c:
                quot[k - dq] = c
                for j, b in enumerate(other._c):
                    rem[k - dq + j] -= c * b
        return UniPoly(quot), UniPoly(rem[:dq] if dq > 0 else ())

    def exact_div(self, other) -> "UniPoly":
        q, r = divmod(self, other)
        if r:
            raise ArithmeticError("inexact polynomial division")
        return q

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, UniPoly) else UniPoly()
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def derivative(self, k: int = 1) -> "UniPoly":
        if k < 0:
            raise ValueError("derivative order must be non-negative")
        c = self._c
        for _ in range(k):
            c = tuple(i * c[i] for i in range(1, len(c)))
        return UniPoly(c)

    def scale_arg(self, factor) -> "UniPoly":
        """Return p(factor * x)."""
        factor = as_rational(factor)
        return UniPoly(tuple(c * factor**k for k, c in enumerate(self._c)))

    def reversed(self, length: int) -> "UniPoly":
        """Return x^(length-1) p(1/x); ``length`` must exceed the degree."""
        if self.degree >= length:
            raise ValueError("reversal length smaller than degree")
        padded = list(self._c) + [Fraction(0)] * (length - len(self._c))
        return UniPoly(reversed(padded))

    def to_json(self) -> list:
        return [fmt_rational(c) for c in self._c]


Exponent = tuple


class MultiPoly:
    """Sparse polynomial in ``arity`` variables with rational coefficients."""

    __slots__ = ("arity", "_t")

    def __init__(self, arity: int, terms: Mapping[Exponent, Number] | None = None):
        if arity < 1:
            raise ArityError("arity must be positive")
        self.arity = arity
        clean = {}
        for exp, c in (terms or {}).items():
            exp = tuple(exp)
            if len(exp) != arity or any(e < 0 for e in exp):
                raise ArityError(f"bad exponent vector {exp} for arity {arity}")
            c = as_rational(c)
            if c:
                clean[exp] = clean.get(exp, Fraction(0)) + c
        self._t = {e: c for e, c in clean.items() if c}

    @classmethod
    def _raw(cls, arity: int, terms: dict) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.arity = arity
        obj._t = terms
        return obj

    @classmethod
    def const(cls, arity: int, value) -> "MultiPoly":
        return cls(arity, {(0,) * arity: value})

    @classmethod
    def var(cls, index: int, arity: int) -> "MultiPoly":
        exp = [0] * arity
        exp[index] = 1
        return cls(arity, {tuple(exp): 1})

    @classmethod
    def from_unipoly(cls, p: UniPoly, index: int, arity: int) -> "MultiPoly":
        terms = {}
        for k, c in enumerate(p.coeffs):
            if c:
                exp = [0] * arity
                exp[index] = k
                terms[tuple(exp)] = c
        return cls._raw(arity, terms)

    @property
    def terms(self) -> dict:
        return dict(self._t)

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e in self._t), default=-1)

    def is_zero(self) -> bool:
        return not self._t

    def __bool__(self) -> bool:
        return bool(self._t)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self.arity == other.arity and self._t == other._t
        if isinstance(other, (int, Fraction)):
            return self._t == MultiPoly.const(self.arity, other)._t
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("MultiPoly", self.arity, frozenset(self._t.items())))

    def __repr__(self) -> str:
        items = ", ".join(f"{e}: {fmt_rational(c)}" for e, c in sorted(self._t.items()))
        return f"MultiPoly({self.arity}, {{{items}}})"

    def _coerce(self, other) -> "MultiPoly":
        if isinstance(other, MultiPoly):
            if other.arity != self.arity:
                raise ArityError("arity mismatch")
            return other
        if isinstance(other, (int, Fraction)):
            return MultiPoly.const(self.arity, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out = dict(self._t)
        for e, c in other._t.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return MultiPoly._raw(self.arity, out)

    __radd__ = __add__

    def __neg__(self) -> "MultiPoly":
        return MultiPoly._raw(self.arity, {e: -c for e, c in self._t.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                return MultiPoly._raw(self.arity, {})
            return MultiPoly._raw(self.arity, {e: c * other for e, c in self._t.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        out: dict = {}
        for e1, c1 in self._t.items():
            for e2, c2 in other._t.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly._raw(self.arity, {e: c for e, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power")
        result, base = MultiPoly.const(self.arity, 1), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def _leading(self):
        exp = max(self._t)  # lex order
        return exp, self._t[exp]

    def exact_div(self, other) -> "MultiPoly":
        """Exact quotient; raises ArithmeticError when ``other`` does not divide."""
        other = self._coerce(other)
        if not other._t:
            raise ZeroDivisionError("polynomial division by zero")
        rem, quot = self, MultiPoly._raw(self.arity, {})
        lexp, lc = other._leading()
        while rem._t:
            rexp, rc = rem._leading()
            shift = tuple(a - b for a, b in zip(rexp, lexp))
            if any(s < 0 for s in shift):
                raise ArithmeticError("inexact polynomial division")
            mono = MultiPoly._raw(self.arity, {shift: rc / lc})
            quot = quot + mono
            rem = rem - mono * other
        return quot

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * (Fraction(1) / other)
        return self.exact_div(other)

    def __call__(self, *point):
        if len(point) == 1 and isinstance(point[0], (list, tuple)):
            point = tuple(point[0])
        if len(point) != self.arity:
            raise ArityError(f"expected {self.arity} coordinates, got {len(point)}")
        pt = [as_rational(v) for v in point]
        total = Fraction(0)
        for exp, c in self._t.items():
            term = c
            for v, e in zip(pt, exp):
                if e:
                    term *= v**e
            total += term
        return total

    def contract(self, values: Sequence[Sequence[Fraction]] | Sequence[Fraction]) -> Fraction:
        """Replace every monomial prod s_j^a_j by prod values[a_j] (same table for all j)."""
        total = Fraction(0)
        for exp, c in self._t.items():
            term = c
            for a in exp:
                term *= values[a]
                if not term:
                    break
            total += term
        return total


def poly_derivative(p: UniPoly, k: int) -> UniPoly:
    return p.derivative(k)


def poly_eval(p: UniPoly | MultiPoly, point: Sequence) -> Fraction:
    if isinstance(p, UniPoly):
        if len(point) != 1:
            raise ArityError(f"univariate polynomial evaluated at {len(point)} coordinates")
        return p(as_rational(point[0]))
    return p(tuple(point))


def _check_square(m: Sequence[Sequence]) -> int:
    n = len(m)
    for row in m:
        if len(row) != n:
            raise NonSquareError(f"matrix is not square ({n} rows, row of length {len(row)})")
    return n


def _bareiss_int(a: list) -> int:
    n = len(a)
    sign, prev = 1, 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i, row_k = a[i], a[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * akk - aik * row_k[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def _det_rational(m: Sequence[Sequence]) -> Fraction:
    rows, scale = [], 1
    for row in m:
        fr = [as_rational(v) for v in row]
        d = lcm(*(v.denominator for v in fr)) if fr else 1
        scale *= d
        rows.append([v.numerator * (d // v.denominator) for v in fr])
    return Fraction(_bareiss_int(rows), scale)


def det_cofactor(m: Sequence[Sequence]):
    """Laplace expansion along rows, memoized over used-column sets."""
    n = _check_square(m)
    if n == 0:
        return Fraction(1)
    memo: dict = {}

    def minor(row: int, mask: int):
        if row == n:
            return Fraction(1)
        key = mask
        if key in memo:
            return memo[key]
        total = None
        pos = 0
        for col in range(n):
            if mask >> col & 1:
                continue
            entry = m[row][col]
            if not (isinstance(entry, (int, Fraction)) and entry == 0):
                term = entry * minor(row + 1, mask | (1 << col))
                if pos % 2:
                    term = -term
                total = term if total is None else total + term
            pos += 1
        if total is None:
            total = Fraction(0)
        memo[key] = total
        return total

    return minor(0, 0)


def _lift(entry, like):
    if isinstance(entry, (UniPoly, MultiPoly)):
        return entry
    if isinstance(like, UniPoly):
        return UniPoly.const(entry)
    return MultiPoly.const(like.arity, entry)


def _det_bareiss_ring(m: Sequence[Sequence], like):
    n = len(m)
    a = [[_lift(v, like) for v in row] for row in m]
    sign = 1
    prev = _lift(1, like)
    for k in range(n - 1):
        if a[k][k].is_zero():
            for i in range(k + 1, n):
                if not a[i][k].is_zero():
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return _lift(0, like)
        akk = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * akk - aik * a[k][j]).exact_div(prev)
        prev = akk
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


COFACTOR_MAX_ORDER = 6


def det_exact(m: Sequence[Sequence]):
    """Exact determinant of a square matrix of rationals or polynomials.

    Rational matrices go through fraction-free Bareiss on the integer matrix
    obtained by clearing row denominators. Polynomial matrices use cofactor
    expansion up to order 6 and Bareiss with exact division above that.
    The empty matrix has determinant 1.
    """
    n = _check_square(m)
    if n == 0:
        return Fraction(1)
    like = None
    for row in m:
        for v in row:
            if isinstance(v, (UniPoly, MultiPoly)):
                like = v
                break
        if like is not None:
            break
    if like is None:
        return _det_rational(m)
    if n <= COFACTOR_MAX_ORDER:
        d = det_cofactor(m)
        return _lift(d, like)
    return _det_bareiss_ring(m, like)


def elem_sym(k: int, values: Sequence) -> Fraction:
    """k-th elementary symmetric function of ``values``."""
    if k < 0 or k > len(values):
        raise OpdetError(f"elementary symmetric index {k} out of range 0..{len(values)}")
    e = [Fraction(1)] + [Fraction(0)] * len(values)
    for i, v in enumerate(values, start=1):
        v = as_rational(v)
        for j in range(i, 0, -1):
            e[j] += v * e[j - 1]
    return e[k]


def vandermonde(nodes: Sequence) -> Fraction:
    """prod_{i<j} (t_j - t_i); 1 for fewer than two nodes."""
    t = [as_rational(v) for v in nodes]
    out = Fraction(1)
    for j in range(len(t)):
        for i in range(j):
            out *= t[j] - t[i]
    return out


def superfactorial(k: int) -> int:
    """prod_{j=1}^{k} j!  (1 for k <= 0)."""
    out, f = 1, 1
    for j in range(1, k + 1):
        f *= j
        out *= f
    return out


def rising(a, k: int) -> Fraction:
    """Pochhammer symbol (a)_k."""
    a = as_rational(a)
    out = Fraction(1)
    for j in range(k):
        out *= a + j
    return out


def grid(*axes: Sequence) -> Iterable[tuple]:
    return _cartesian(*axes)
