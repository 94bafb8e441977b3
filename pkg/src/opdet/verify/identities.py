"""Registry of determinant identities, each checked through two independent code paths.

Left-hand sides come from :mod:`opdet.dets` (Slater, confluent and Wronskian
determinants). Right-hand sides are built from moments, shifted-moment
polynomials or brute-force integrals. Polynomial identities are compared at
degree + 1 distinct points, or as expanded polynomials for small orders.
"""

from __future__ import annotations

from decimal import Decimal
from enum import Enum
from fractions import Fraction
from itertools import permutations
from math import factorial
from typing import Callable, Iterable, Optional

from .. import dets
from ..errors import InsufficientMomentsError, OpdetError, UnsupportedSpecError
from ..exactcore import UniPoly, det_exact, elem_sym, superfactorial, vandermonde
from ..measures import (
    Explicit,
    Gegenbauer,
    Hermite,
    Laguerre,
    MeasureSpec,
    NodeSet,
    closed_form_hankel_det,
    format_measure,
    hankel_det,
    moment,
)
from ..opoly import (
    JensenSeq,
    classical_poly,
    classical_q_closed,
    gegenbauer_gamma,
    hermite_poly,
    jensen,
    laguerre_poly,
    orth_poly,
    q_nodes,
    q_poly,
    r_poly,
)
from .convergence import jensen_convergence
from .plan import SamplePlan, compositions, eval_points
from .report import VerifyReport
from .selberg import selberg_integral

F = Fraction


class IdentityId(str, Enum):
    LEC_Q = "LEC_Q"
    LEC_R = "LEC_R"
    W1M = "W1M"
    W2M = "W2M"
    COR_LEC_Q = "COR_LEC_Q"
    COR_LEC_R = "COR_LEC_R"
    MAIN2_Q = "MAIN2_Q"
    MAIN2_R = "MAIN2_R"
    MAIN = "MAIN"
    DELTA_INT = "DELTA_INT"
    PN_DETQ = "PN_DETQ"
    QN_RECUR = "QN_RECUR"
    Q_EQ_R = "Q_EQ_R"
    DETQ_INT = "DETQ_INT"
    F_SUM = "F_SUM"
    F_GAP = "F_GAP"
    GAP_3x3_SECOND = "GAP_3x3_SECOND"
    GAP_3x3_J = "GAP_3x3_J"
    DET_G = "DET_G"
    DET_G_PHI = "DET_G_PHI"
    TURAN_LAGUERRE_N2 = "TURAN_LAGUERRE_N2"
    HERMITE_MAIN = "HERMITE_MAIN"
    HERMITE_WRONSKIAN = "HERMITE_WRONSKIAN"
    LAGUERRE_MAIN = "LAGUERRE_MAIN"
    GEGEN_MAIN = "GEGEN_MAIN"
    GL_CONVERGENCE = "GL_CONVERGENCE"
    LAPLACE_DET_NONNEG = "LAPLACE_DET_NONNEG"

    @classmethod
    def parse(cls, text: str) -> "IdentityId":
        try:
            return cls(text.strip().upper().replace("GAP_3X3", "GAP_3x3"))
        except ValueError:
            raise OpdetError(f"unknown identity id {text!r}") from None


HERMITE_EXPLICIT = Explicit(tuple(moment(Hermite(), k) for k in range(10)))

DEFAULT_SPECS = (
    Hermite(),
    Laguerre(F(0)),
    Laguerre(F(3, 2)),
    Gegenbauer(F(1, 2)),
    Gegenbauer(F(3, 2)),
    HERMITE_EXPLICIT,
)


def _case(rep: VerifyReport, fn: Callable[[], None]) -> None:
    """Run one case; a finite moment list that is too short counts as skipped."""
    try:
        fn()
    except InsufficientMomentsError:
        rep.skip()


def _det(rows) -> Fraction:
    return det_exact(rows)


def _B(spec, n, m) -> Fraction:
    return dets.structure_constant("B", spec, n, m).value


def _C(spec, n, m) -> Fraction:
    return dets.structure_constant("C", spec, n, m).value


def _poly_wronskian(polys: list) -> UniPoly:
    m = len(polys)
    return det_exact([[polys[j].derivative(i) for j in range(m)] for i in range(m)])


# Slater determinants at simple nodes --------------------------------------------


def _lec(spec, plan, rep, form: str) -> None:
    for n in range(1, plan.n_max + 1):
        for m in range(1, plan.m_max + 1):
            for ts in plan.node_tuples(m, plan.tuples_per_case, rep.identity, n):

                def case(n=n, m=m, ts=ts):
                    lhs = dets.slater(spec, n, ts) / vandermonde(ts)
                    nodes = NodeSet.simple(ts)
                    h = dets.hankel_q_det(spec, n, nodes) if form == "q" else dets.hankel_r_det(spec, n, nodes)
                    rep.check({"n": n, "m": m, "nodes": list(ts)}, lhs, _B(spec, n, m) * h)

                _case(rep, case)


def _sigma_r(spec, k: int, ts) -> Fraction:
    """r_k(t) = sum_j (-1)^j sigma_j(t) mu_{k+m-j}."""
    m = len(ts)
    return sum((F(-1) ** j * elem_sym(j, ts) * moment(spec, k + m - j) for j in range(m + 1)), F(0))


def _w1m(spec, plan, rep) -> None:
    for m in range(1, plan.m_max + 2):
        for ts in plan.node_tuples(m, 2 * plan.tuples_small, "W1M"):

            def case(m=m, ts=ts):
                lhs = dets.symmetrized(spec, 1, ts)
                dm = F(1)
                for k in range(1, m):
                    dm *= hankel_det(spec, k)
                rhs = F(-1) ** m * dm * _sigma_r(spec, 0, ts)
                rep.check({"m": m, "nodes": list(ts)}, lhs, rhs)

            _case(rep, case)


def _w2m(spec, plan, rep) -> None:
    for m in range(1, plan.m_max + 2):
        for ts in plan.node_tuples(m, 2 * plan.tuples_small, "W2M"):

            def case(m=m, ts=ts):
                lhs = dets.slater(spec, 2, ts) / vandermonde(ts)
                b = F(1)
                for k in range(1, m):
                    b *= hankel_det(spec, k + 1)
                r0, r1, r2 = (_sigma_r(spec, k, ts) for k in range(3))
                rep.check({"m": m, "nodes": list(ts)}, lhs, b * (r2 * r0 - r1 * r1))

            _case(rep, case)


# Wronskians as Hankel determinants -------------------------------------------


def _cor_lec(spec, plan, rep, form: str) -> None:
    for n in range(1, plan.n_max + 1):
        for m in range(1, plan.m_max + 1):

            def case(n=n, m=m):
                c = _C(spec, n, m)
                for x in eval_points(n * m + 1):
                    if form == "q":
                        ent = [[q_poly(spec, m + i + j)(x) for j in range(n)] for i in range(n)]
                    else:
                        ent = [[r_poly(spec, m, i + j)(x) for j in range(n)] for i in range(n)]
                    rep.check({"n": n, "m": m, "x": x}, dets.wronskian(spec, n, m, x), c * _det(ent))

            _case(rep, case)
    if isinstance(spec, Hermite):
        # W(p_2, p_3; x) = x^4/8 + 3/32 and C_{2,2} = 1/4
        w = dets.wronskian_poly(spec, 2, 2)
        rep.check({"witness": "W(p2,p3)"}, w, UniPoly((F(3, 32), 0, 0, 0, F(1, 8))))
        rep.check({"witness": "C22"}, _C(spec, 2, 2), F(1, 4))
        if form == "q":
            h = det_exact([[q_poly(spec, 2 + i + j) for j in range(2)] for i in range(2)])
        else:
            h = det_exact([[r_poly(spec, 2, i + j) for j in range(2)] for i in range(2)])
        rep.check({"witness": "C22*hankel"}, w, h * F(1, 4))


# confluent nodes --------------------------------------------------------------


def _vec_cases(plan, rep, n_cap: int, total: int, extra_nodes: int = 0):
    for mults in compositions(total, plan.r_max):
        for n in range(1, min(plan.n_max, n_cap) + 1):
            for ts in plan.node_tuples(len(mults) + extra_nodes, plan.tuples_small, rep.identity, n, *mults):
                yield n, mults, ts


def _main2(spec, plan, rep, form: str) -> None:
    for n, mults, ts in _vec_cases(plan, rep, 2, plan.mult_total_max):

        def case(n=n, mults=mults, ts=ts):
            nodes = NodeSet.of(ts, mults)
            lhs = dets.slater_general(spec, n, nodes) / dets.cross_factor(nodes)
            c = dets.structure_constant("Cvec", spec, n, mults).value
            h = dets.hankel_q_det(spec, n, nodes) if form == "q" else dets.hankel_r_det(spec, n, nodes)
            rep.check({"n": n, "mults": list(mults), "nodes": list(ts)}, lhs, c * h)

        _case(rep, case)


def _node_product(nodes: NodeSet, x) -> Fraction:
    out = F(1)
    for t, m in nodes:
        out *= (x - t) ** m
    return out


def _main(spec, plan, rep) -> None:
    for n, mults, ts in _vec_cases(plan, rep, 2, plan.mult_total_max, extra_nodes=1):

        def case(n=n, mults=mults, ts=ts):
            nodes = NodeSet.of(ts[:-1], mults)
            x = ts[-1]
            lhs = dets.slater_general(spec, n, NodeSet(nodes.entries + ((x, 1),)))
            b = dets.structure_constant("Bvec", spec, n, mults).value
            f = dets.f_det(spec, range(1, n + 1), nodes, x)
            rhs = b * _node_product(nodes, x) * dets.cross_factor(nodes) * f
            rep.check({"n": n, "mults": list(mults), "nodes": list(ts[:-1]), "x": x}, lhs, rhs)

        _case(rep, case)


def _delta_int(spec, plan, rep) -> None:
    for n, mults, ts in _vec_cases(plan, rep, 3, min(3, plan.mult_total_max)):

        def case(n=n, mults=mults, ts=ts):
            nodes = NodeSet.of(ts, mults)
            lhs = dets.slater_general(spec, n, nodes)
            c = dets.structure_constant("Cvec", spec, n, mults).value
            rhs = c * dets.cross_factor(nodes) * selberg_integral(spec, n, nodes)
            rep.check({"n": n, "mults": list(mults), "nodes": list(ts)}, lhs, rhs)

        _case(rep, case)


def printed_constant_cases() -> list:
    """Pinning cases where the factorial product is taken up to m_i rather than m_i - 1.

    Each entry carries the determinant, the value predicted with the corrected
    constant and the value predicted with the printed one.
    """
    h = Hermite()
    out = []
    mults = (2,)
    for t in (F(0), F(1), F(-1, 2)):
        nodes = NodeSet.of((t,), mults)
        lhs = dets.slater_general(h, 1, nodes)
        r = dets.hankel_r_det(h, 1, nodes)
        fixed = dets.structure_constant("Cvec", h, 1, mults).value * r
        printed = dets.structure_constant("Cvec", h, 1, mults, printed=True).value * r
        out.append({"form": "C", "nodes": [t], "lhs": lhs, "corrected": fixed, "printed": printed})
    nodes, x = NodeSet.of((F(0),), mults), F(1)
    lhs = dets.slater_general(h, 1, NodeSet(nodes.entries + ((x, 1),)))
    tail = _node_product(nodes, x) * dets.f_det(h, [1], nodes, x)
    fixed = dets.structure_constant("Bvec", h, 1, mults).value * tail
    printed = dets.structure_constant("Bvec", h, 1, mults, printed=True).value * tail
    out.append({"form": "B", "nodes": [F(0)], "x": x, "lhs": lhs, "corrected": fixed, "printed": printed})
    return out


# shifted-moment determinants and F-determinants -------------------------------


def _pn_detq(spec, plan, rep) -> None:
    for n in range(0, plan.n_max + 2):

        def case(n=n):
            for x in eval_points(n + 1):
                rhs = F(-1) ** n * _det([[q_poly(spec, i + j + 1)(x) for j in range(n)] for i in range(n)])
                rep.check({"n": n, "x": x}, orth_poly(spec, n)(x), rhs)

        _case(rep, case)


def _qn_recur(spec, plan, rep) -> None:
    x = UniPoly.x()
    for total in range(1, 7):
        for m in range(1, total + 1):
            n = total - m
            for ts in plan.node_tuples(m, plan.tuples_small, "QN_RECUR", n):

                def case(n=n, m=m, ts=ts):
                    lhs = q_nodes(spec, ts, n)
                    rhs = q_nodes(spec, ts[:-1], n + 1) + (x - ts[-1]) * q_nodes(spec, ts[:-1], n)
                    rep.check({"n": n, "nodes": list(ts)}, lhs, rhs)

                _case(rep, case)

            def collapse(n=n, m=m):
                for p in eval_points(7):
                    lhs = q_nodes(spec, NodeSet(((p, m),)), n)(p)
                    rep.check({"n": n, "m": m, "collapse_at": p}, lhs, q_poly(spec, n + m)(p))

            _case(rep, collapse)


def _q_eq_r(spec, plan, rep) -> None:
    for n, mults, ts in _vec_cases(plan, rep, plan.n_max, plan.mult_total_max):

        def case(n=n, mults=mults, ts=ts):
            nodes = NodeSet.of(ts, mults)
            r_ref = dets.hankel_r_det(spec, n, nodes)
            for perm in permutations(nodes.entries):
                pn = NodeSet(perm)
                params = {"n": n, "entries": [[t, m] for t, m in perm]}
                rep.check({**params, "form": "q"}, dets.hankel_q_det(spec, n, pn), r_ref)
                rep.check({**params, "form": "r"}, dets.hankel_r_det(spec, n, pn), r_ref)

        _case(rep, case)


def _detq_int(spec, plan, rep) -> None:
    for n, mults, ts in _vec_cases(plan, rep, 3, min(3, plan.mult_total_max), extra_nodes=1):

        def case(n=n, mults=mults, ts=ts):
            nodes = NodeSet.of(ts[:-1], mults)
            x = ts[-1]
            lhs = dets.f_det(spec, range(1, n + 1), nodes, x)
            rhs = selberg_integral(spec, n, nodes, extra_x=x)
            rep.check({"n": n, "mults": list(mults), "nodes": list(ts[:-1]), "x": x}, lhs, rhs)

        _case(rep, case)


def _hat(indices: Iterable[int], *drop: int) -> list:
    return [i for i in indices if i not in drop]


def _f_sum(spec, plan, rep) -> None:
    x = UniPoly.x()
    for m in range(1, 5):
        for n in range(1, 6 - m):
            for ts in plan.node_tuples(1, n + 1, "F_SUM", m, n):

                def case(m=m, n=n, t=ts[0]):
                    lhs = dets.f_det_poly(spec, range(m, m + n), [t])
                    full = range(m, m + n + 1)
                    rhs = UniPoly()
                    for k in range(n + 1):
                        rhs = rhs + (x - t) ** k * dets.f_det_poly(spec, _hat(full, m + k))
                    rep.check({"m": m, "n": n, "t": t}, lhs, rhs)

                _case(rep, case)


def _f_gap(spec, plan, rep) -> None:
    for n in range(1, plan.n_max + 1):
        for m in range(1, plan.m_max + 1):
            for k in range(m, n + m + 1):

                def case(n=n, m=m, k=k):
                    c = dets.structure_constant("Cvec", spec, n, (1, m)).value
                    plan_rows = dets.RowPlan.gapped(m, k)
                    idx = _hat(range(m, m + n + 1), k)
                    bound = sum(n + j for j in range(m + 1)) + sum(i + n for i in idx)
                    for x in eval_points(bound + 1):
                        lhs = dets.slater_general(spec, n, [x], plan_rows)
                        rhs = F(-1) ** (k - m) * c * factorial(k) * dets.f_det(spec, idx, (), x)
                        rep.check({"n": n, "m": m, "k": k, "x": x}, lhs, rhs)

                _case(rep, case)


def _gap_second(spec, plan, rep) -> None:
    for n in range(1, plan.n_max + 1):
        for k in range(2, n + 5):

            def case(n=n, k=k):
                b = _B(spec, n, 3)
                rows = dets.RowPlan(((0, 2, k),))
                idx = _hat(range(1, n + 3), 2, k)
                for x in eval_points(n * (2 * n + 3) + 1):
                    lhs = dets.slater_general(spec, n, [x], rows)
                    if 3 <= k <= n + 2:
                        rhs = 2 * F(-1) ** (k + 1) * factorial(k) * b * dets.f_det(spec, idx, (), x)
                    else:
                        rhs = F(0)
                    rep.check({"n": n, "k": k, "x": x}, lhs, rhs)

            _case(rep, case)


def _gap_j(spec, plan, rep) -> None:
    for n in range(1, plan.n_max + 1):
        for x, t1, t2 in plan.node_tuples(3, plan.tuples_small, "GAP_3x3_J", n):

            def base(n=n, x=x, t1=t1, t2=t2):
                lhs = dets.slater(spec, n, [x, t1, t2])
                f = dets.f_det(spec, range(1, n + 1), [t1, t2], x)
                rhs = _B(spec, n, 3) * (t2 - t1) * (t2 - x) * (t1 - x) * f
                rep.check({"n": n, "x": x, "t1": t1, "t2": t2}, lhs, rhs)

            _case(rep, base)

            def fk(k, x=x, t2=t2, n=n):
                if k > n:
                    return F(0)
                return dets.f_det(spec, _hat(range(1, n + 2), k + 1), [t2], x)

            for j in range(2, n + 3):

                def case(n=n, j=j, x=x, t2=t2, fk=fk):
                    b = _B(spec, n, 3)
                    rows = dets.RowPlan(((0, j), (0,)))
                    lhs = dets.slater_general(spec, n, [x, t2], rows)
                    rhs = b * (x - t2) * F(-1) ** j * factorial(j) * (fk(j - 2) - (x - t2) * fk(j - 1))
                    rep.check({"n": n, "j": j, "x": x, "t2": t2}, lhs, rhs)

                _case(rep, case)


def double_gap_conjecture(spec: MeasureSpec, plan: Optional[SamplePlan] = None) -> VerifyReport:
    """Advisory check of the two-gap expansion of F[q_1..q^_k..q_{n+1}](t; x) in powers of x - t."""
    plan = plan or SamplePlan()
    rep = VerifyReport("F_DOUBLE_GAP", format_measure(spec), plan.to_json(), advisory=True)
    x = UniPoly.x()
    for n in range(1, plan.n_max + 1):
        for k in range(1, n + 2):
            for (t,) in plan.node_tuples(1, n + 2, "F_DOUBLE_GAP", n, k):

                def case(n=n, k=k, t=t):
                    lhs = dets.f_det_poly(spec, _hat(range(1, n + 2), k), [t])
                    rhs = UniPoly()
                    for i in range(1, k + 1):
                        for j in range(k + 1, n + 3):
                            term = dets.f_det_poly(spec, _hat(range(1, n + 3), i, j))
                            rhs = rhs + (x - t) ** (i - 1 + j - k - 1) * term
                    rep.check({"n": n, "k": k, "t": t}, lhs, rhs)

                _case(rep, case)
    return rep


# Jensen polynomials ---------------------------------------------------------


def _jensen_cases(spec, plan, rep, body) -> None:
    for m in range(1, plan.m_max + 2):
        for n in range(1, plan.n_max + 1):

            def case(m=m, n=n):
                gs = JensenSeq.from_measure(spec, m + 2 * n)
                body(gs, m, n)

            _case(rep, case)


def _det_g(spec, plan, rep) -> None:
    def body(gs, m, n):
        lhs = det_exact([[jensen(gs, m + i + j) for j in range(n)] for i in range(n)])
        ent = [
            [jensen(gs, m + i + j).derivative(i + j) * F(factorial(m), factorial(m + i + j)) for j in range(n)]
            for i in range(n)
        ]
        rhs = UniPoly.monomial(n * (n - 1)) * det_exact(ent)
        rep.check({"m": m, "n": n}, lhs, rhs)

    _jensen_cases(spec, plan, rep, body)


def _det_g_phi(spec, plan, rep) -> None:
    def body(gs, m, n):
        shifted = det_exact([[jensen(gs, m, i + j) for j in range(n)] for i in range(n)])
        lhs = det_exact([[jensen(gs, m + i + j) for j in range(n)] for i in range(n)])
        rep.check({"m": m, "n": n, "form": "shift"}, lhs, UniPoly.monomial(n * (n - 1)) * shifted)
        w = dets.wronskian_poly(spec, n, m).reversed(n * m + 1)
        rep.check({"m": m, "n": n, "form": "wronskian"}, shifted * _C(spec, n, m), w * F(-1) ** (n * m))

    _jensen_cases(spec, plan, rep, body)
    for m in range(1, plan.m_max + 2):

        def gl(m=m):
            # n = 1: g_m(x) = x^m W(p_1..p_m; 1/x) / prod_{k<m} k! det M_k
            gs = JensenSeq.from_measure(spec, m)
            denom = F(superfactorial(m - 1))
            for k in range(1, m):
                denom *= hankel_det(spec, k)
            rhs = dets.wronskian_poly(spec, 1, m).reversed(m + 1) / denom
            rep.check({"m": m, "form": "n=1"}, jensen(gs, m), rhs)

        _case(rep, gl)


def _turan(spec, plan, rep) -> None:
    for m in range(1, plan.m_max + 2):

        def case(m=m):
            gs = JensenSeq.from_measure(spec, m + 2)
            g0, g1, g2 = (jensen(gs, m + i) for i in range(3))
            lhs = g1 * g1 - g0 * g2
            inner = g1.derivative() * g1.derivative() * (m + 2) - g0 * g2.derivative(2) * (m + 1)
            rhs = UniPoly.monomial(2, F(1, (m + 2) * (m + 1) ** 2)) * inner
            rep.check({"m": m}, lhs, rhs)

        _case(rep, case)


def _laplace_det(spec, plan, rep) -> None:
    for x in (F(1, 4), F(1, 2), F(1), F(2)):
        for m in (2, 4, 8, 16):
            for n in range(1, plan.n_max + 1):

                def case(x=x, m=m, n=n):
                    gs = JensenSeq.from_measure(spec, m + 2 * (n - 1))
                    v = det_exact([[jensen(gs, m, i + j)(x / m) for j in range(n)] for i in range(n)])
                    rep.expect({"x": x, "m": m, "n": n}, v >= 0, v, ">= 0")

                _case(rep, case)


def _gl_convergence(spec, plan, rep) -> None:
    table = jensen_convergence(spec, F(1, 2), 64)
    for row in table.rows:
        if row.wronskian_ok is not None:
            rep.expect({"m": row.m, "check": "wronskian"}, row.wronskian_ok, row.value, "wronskian form")
    if table.trend_ok is not None:
        late, early = table.error_at(64), table.error_at(16)
        rep.expect({"check": "error(64) < error(16)"}, table.trend_ok, str(late), str(early))
    if isinstance(spec, Laguerre) and spec.alpha == 0:
        final = table.error_at(64)
        rep.expect({"check": "error(64) < 0.01"}, final < Decimal("0.01"), str(final), "0.01")
    rep.details = table.to_json()


# classical families -----------------------------------------------------------


def _ratio_cases(spec, plan, rep, normalized: Callable[[int], UniPoly]) -> None:
    for n in range(1, min(plan.n_max, 2) + 1):
        for m in range(1, plan.m_max + 1):
            for ts in plan.node_tuples(m, plan.tuples_small, rep.identity, n, m):

                def case(n=n, m=m, ts=ts):
                    lhs = _det([[normalized(n + j)(t) for j in range(m)] for t in ts]) / vandermonde(ts)
                    dm = closed_form_hankel_det(spec, n - 1)
                    sign = F(-1) ** (n * m)
                    r = _det([[_sigma_r(spec, i + j, ts) for j in range(n)] for i in range(n)])
                    params = {"n": n, "m": m, "nodes": list(ts)}
                    rep.check({**params, "form": "r"}, lhs, sign * r / dm)
                    q = _det(
                        [[q_nodes(spec, ts[:-1], i + j + 1)(ts[-1]) for j in range(n)] for i in range(n)]
                    )
                    rep.check({**params, "form": "q"}, lhs, sign * q / dm)

                _case(rep, case)


def _closed_forms(spec, rep) -> None:
    for n in range(7):
        rep.check({"q_closed": n}, classical_q_closed(spec, n), q_poly(spec, n))
    for n in range(6):
        rep.check({"hankel_closed": n}, closed_form_hankel_det(spec, n), hankel_det(spec, n))


def _r_hankel(spec, n, m) -> UniPoly:
    return det_exact([[r_poly(spec, m, i + j) for j in range(n)] for i in range(n)])


def _hermite_main(spec, plan, rep) -> None:
    _ratio_cases(spec, plan, rep, lambda k: hermite_poly(k) / 2**k)
    _closed_forms(spec, rep)


def _hermite_hat(k: int) -> UniPoly:
    """i^-k H_k(ix), a real polynomial."""
    return UniPoly(c * (-1) ** ((k - d) // 2) if c else 0 for d, c in enumerate(hermite_poly(k).coeffs))


def _hermite_wronskian(spec, plan, rep) -> None:
    for n in range(1, min(plan.n_max, 2) + 1):
        for m in range(1, plan.m_max + 1):
            w = _poly_wronskian([hermite_poly(n + j) for j in range(m)])
            ratio = F(superfactorial(m - 1), superfactorial(n - 1))
            k_r = F(-1) ** (m * n) * 2 ** ((m + n) * (m + n - 1) // 2) * ratio
            rep.check({"n": n, "m": m, "form": "r"}, w, _r_hankel(spec, n, m) * k_r)
            k_h = F(-1) ** (m * n + n * (n + m - 1)) * F(2 ** (m * (m - 1) // 2), 2 ** (n * (n - 1) // 2)) * ratio
            hh = det_exact([[_hermite_hat(m + i + j) for j in range(n)] for i in range(n)])
            rep.check({"n": n, "m": m, "form": "H(ix)"}, w, hh * k_h)


def _laguerre_main(spec, plan, rep) -> None:
    a = spec.alpha
    _ratio_cases(spec, plan, rep, lambda k: laguerre_poly(k, a) * (F(-1) ** k * factorial(k)))
    _closed_forms(spec, rep)
    for n in range(1, min(plan.n_max, 2) + 1):
        for m in range(1, plan.m_max + 1):
            w = _poly_wronskian([laguerre_poly(n + j, a) for j in range(m)])
            denom = closed_form_hankel_det(spec, n - 1)
            for j in range(1, m + 1):
                denom *= factorial(n + j - 1)
            k = F(-1) ** (m * (m - 1) // 2) * superfactorial(m - 1) / denom
            rep.check({"n": n, "m": m, "form": "r"}, w, _r_hankel(spec, n, m) * k)
            ent = [
                [laguerre_poly(m + i + j, -m - i - j - a - 1).scale_arg(-1) * factorial(m + i + j) for j in range(n)]
                for i in range(n)
            ]
            rep.check({"n": n, "m": m, "form": "L(-x)"}, w, det_exact(ent) * (k * F(-1) ** (n * m)))


def _gegen_main(spec, plan, rep) -> None:
    lam = spec.lam
    _ratio_cases(spec, plan, rep, lambda k: classical_poly(spec, k) / gegenbauer_gamma(k, lam))
    _closed_forms(spec, rep)
    for n in range(1, min(plan.n_max, 2) + 1):
        for m in range(1, plan.m_max + 1):
            w = _poly_wronskian([classical_poly(spec, n + j) for j in range(m)])
            k = F(-1) ** (m * n) * superfactorial(m - 1) / closed_form_hankel_det(spec, n - 1)
            for j in range(1, m + 1):
                k *= gegenbauer_gamma(n + j - 1, lam)
            rep.check({"n": n, "m": m, "form": "r"}, w, _r_hankel(spec, n, m) * k)


# registry -------------------------------------------------------------------

ANY = (Hermite, Laguerre, Gegenbauer, Explicit)
STIELTJES = (Laguerre, Explicit)

_REGISTRY: dict = {
    IdentityId.LEC_Q: (lambda s, p, r: _lec(s, p, r, "q"), ANY),
    IdentityId.LEC_R: (lambda s, p, r: _lec(s, p, r, "r"), ANY),
    IdentityId.W1M: (_w1m, ANY),
    IdentityId.W2M: (_w2m, ANY),
    IdentityId.COR_LEC_Q: (lambda s, p, r: _cor_lec(s, p, r, "q"), ANY),
    IdentityId.COR_LEC_R: (lambda s, p, r: _cor_lec(s, p, r, "r"), ANY),
    IdentityId.MAIN2_Q: (lambda s, p, r: _main2(s, p, r, "q"), ANY),
    IdentityId.MAIN2_R: (lambda s, p, r: _main2(s, p, r, "r"), ANY),
    IdentityId.MAIN: (_main, ANY),
    IdentityId.DELTA_INT: (_delta_int, ANY),
    IdentityId.PN_DETQ: (_pn_detq, ANY),
    IdentityId.QN_RECUR: (_qn_recur, ANY),
    IdentityId.Q_EQ_R: (_q_eq_r, ANY),
    IdentityId.DETQ_INT: (_detq_int, ANY),
    IdentityId.F_SUM: (_f_sum, ANY),
    IdentityId.F_GAP: (_f_gap, ANY),
    IdentityId.GAP_3x3_SECOND: (_gap_second, ANY),
    IdentityId.GAP_3x3_J: (_gap_j, ANY),
    IdentityId.DET_G: (_det_g, ANY),
    IdentityId.DET_G_PHI: (_det_g_phi, ANY),
    IdentityId.TURAN_LAGUERRE_N2: (_turan, ANY),
    IdentityId.HERMITE_MAIN: (_hermite_main, (Hermite,)),
    IdentityId.HERMITE_WRONSKIAN: (_hermite_wronskian, (Hermite,)),
    IdentityId.LAGUERRE_MAIN: (_laguerre_main, (Laguerre,)),
    IdentityId.GEGEN_MAIN: (_gegen_main, (Gegenbauer,)),
    IdentityId.GL_CONVERGENCE: (_gl_convergence, STIELTJES),
    IdentityId.LAPLACE_DET_NONNEG: (_laplace_det, STIELTJES),
}


def supports(identity: IdentityId, spec: MeasureSpec) -> bool:
    _, kinds = _REGISTRY[IdentityId(identity)]
    if isinstance(spec, Gegenbauer) and spec.lam == 0 and identity == IdentityId.GEGEN_MAIN:
        return False
    if isinstance(spec, Explicit) and kinds is STIELTJES:
        return spec != HERMITE_EXPLICIT
    return isinstance(spec, kinds)


def default_specs_for(identity: IdentityId) -> list:
    specs = [s for s in DEFAULT_SPECS if supports(identity, s)]
    if identity in (IdentityId.DET_G, IdentityId.DET_G_PHI, IdentityId.TURAN_LAGUERRE_N2):
        specs = [s for s in specs if isinstance(s, (Hermite, Laguerre))]
    if identity == IdentityId.GL_CONVERGENCE:
        specs = [Laguerre(F(0))]
    return specs


def verify_identity(identity, spec: MeasureSpec, plan: Optional[SamplePlan] = None) -> VerifyReport:
    """Evaluate both sides of ``identity`` on every sampled case; pass iff all agree exactly."""
    identity = IdentityId(identity)
    plan = plan or SamplePlan()
    if not supports(identity, spec):
        raise UnsupportedSpecError(f"{identity.value} does not apply to {format_measure(spec)}")
    fn, _ = _REGISTRY[identity]
    rep = VerifyReport(identity.value, format_measure(spec), plan.to_json())
    fn(spec, plan, rep)
    return rep


def verify_all(plan: Optional[SamplePlan] = None, specs: Optional[list] = None) -> list:
    """Every identity on its default specs (or on ``specs`` where applicable), plus advisory reports."""
    plan = plan or SamplePlan()
    reports = []
    for identity in IdentityId:
        chosen = default_specs_for(identity) if specs is None else [s for s in specs if supports(identity, s)]
        for spec in chosen:
            reports.append(verify_identity(identity, spec, plan))
    for spec in specs if specs is not None else DEFAULT_SPECS[:1]:
        reports.append(double_gap_conjecture(spec, plan))
    return reports
