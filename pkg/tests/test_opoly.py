from fractions import Fraction as F

import pytest

from opdet.errors import DegenerateMeasureError, InsufficientMomentsError, OpdetError, UnsupportedSpecError
from opdet.exactcore import UniPoly
from opdet.measures import Explicit, Gegenbauer, Hermite, Laguerre, NodeSet, hankel_det, moment
from opdet.opoly import (
    JensenSeq,
    classical_poly,
    classical_q_closed,
    integrate,
    jensen,
    jensen_qr_bridge,
    monic,
    orth_poly,
    orthonormal_scale_squared,
    q_nodes,
    q_poly,
    r_poly,
    r_value,
)

from oracles import (
    gegenbauer_2f1,
    gegenbauer_monic,
    hermite_classical,
    hermite_monic,
    laguerre_classical,
    laguerre_monic,
    shifted_moment_poly,
)

H = Hermite()
L0 = Laguerre(F(0))
FAMILIES = [H, L0, Laguerre(F(3, 2)), Gegenbauer(F(1, 2)), Gegenbauer(F(3, 2))]


def test_orth_poly_examples():
    assert orth_poly(H, 1) == UniPoly.x()
    assert orth_poly(H, 2) == UniPoly([F(-1, 4), 0, F(1, 2)])
    for spec in FAMILIES:
        assert orth_poly(spec, 0) == 1


@pytest.mark.parametrize("n", range(7))
def test_orth_poly_matches_recurrences(n):
    assert monic(orth_poly(H, n)).coeffs == tuple(hermite_monic(n))
    assert monic(orth_poly(Laguerre(F(3, 2)), n)).coeffs == tuple(laguerre_monic(n, F(3, 2)))
    assert monic(orth_poly(Gegenbauer(F(1, 2)), n)).coeffs == tuple(gegenbauer_monic(n, F(1, 2)))
    assert monic(orth_poly(Gegenbauer(F(3, 2)), n)).coeffs == tuple(gegenbauer_monic(n, F(3, 2)))


@pytest.mark.parametrize("spec", FAMILIES, ids=str)
def test_orthogonality_and_norms(spec):
    for n in range(5):
        p = orth_poly(spec, n)
        assert p.leading == hankel_det(spec, n - 1)
        for k in range(n):
            assert integrate(spec, p * UniPoly.monomial(k)) == 0
        assert integrate(spec, p * p) == orthonormal_scale_squared(spec, n)


def test_orth_poly_degenerate():
    with pytest.raises(DegenerateMeasureError):
        orth_poly(Explicit((1, 0, 0, 0, 0)), 2)
    with pytest.raises(InsufficientMomentsError):
        orth_poly(Explicit((1, 0, 1)), 2)


def test_q_and_r_examples():
    assert q_poly(H, 1) == UniPoly([0, -1])
    assert q_poly(H, 2) == UniPoly([F(1, 2), 0, 1])
    assert q_poly(L0, 0) == 1
    assert r_poly(H, 1, 0) == UniPoly([0, -1])
    assert r_poly(H, 2, 0) == UniPoly([F(1, 2), 0, 1])
    assert r_poly(H, 2, 2) == UniPoly([F(3, 4), 0, F(1, 2)])


def test_q_r_against_binomial_oracle():
    for spec in FAMILIES:
        mu = [moment(spec, k) for k in range(12)]
        for n in range(6):
            assert q_poly(spec, n).coeffs == tuple(shifted_moment_poly(mu, n))
            for m in range(4):
                assert r_poly(spec, m, n).coeffs == tuple(shifted_moment_poly(mu, n, m))


def test_q_nodes_and_r_value():
    assert q_nodes(H, NodeSet.simple([0]), 1) == F(1, 2)
    assert q_nodes(H, NodeSet.simple([1]), 1) == UniPoly([F(1, 2), 1])
    assert q_nodes(L0, NodeSet(), 3) == q_poly(L0, 3)
    assert r_value(H, NodeSet.simple([0, 1, 2]), 0) == F(-3, 2)
    assert r_value(H, NodeSet.of([0], [2]), 0) == F(1, 2)
    assert r_value(L0, NodeSet(), 4) == moment(L0, 4)


def test_jensen_examples():
    gs = JensenSeq.from_measure(H, 6)
    assert gs.gammas[:5] == (1, 0, F(1, 2), 0, F(3, 4))
    # gamma_2 = 1/2 makes the quadratic coefficient 1/2
    assert jensen(gs, 2) == UniPoly([1, 0, F(1, 2)])
    assert jensen(gs, 0, 3) == gs.gammas[3]
    assert jensen(gs, 1, 1) == UniPoly([0, F(1, 2)])
    with pytest.raises(InsufficientMomentsError):
        jensen(gs, 5, 3)


def test_jensen_qr_bridge():
    assert jensen_qr_bridge(H, 2, 0).equal
    assert jensen_qr_bridge(H, 2, 0).g_n == UniPoly([1, 0, F(1, 2)])
    assert jensen_qr_bridge(L0, 0, 0).equal
    assert jensen_qr_bridge(L0, 1, 1).equal
    for spec in FAMILIES:
        for n in range(4):
            for k in range(4):
                assert jensen_qr_bridge(spec, n, k).equal


def test_classical_examples():
    assert classical_poly(H, 2) == UniPoly([-2, 0, 4])
    assert classical_poly(L0, 1) == UniPoly([1, -1])
    assert classical_poly(Gegenbauer(F(1, 2)), 2) == UniPoly([F(-1, 2), 0, F(3, 2)])


@pytest.mark.parametrize("n", range(7))
def test_classical_against_independent_forms(n):
    assert classical_poly(H, n).coeffs == tuple(hermite_classical(n))
    for a in (F(0), F(3, 2), F(-1, 3)):
        assert classical_poly(Laguerre(a), n).coeffs == tuple(laguerre_classical(n, a))
    for lam in (F(1, 2), F(3, 2), F(-1, 4)):
        assert classical_poly(Gegenbauer(lam), n).coeffs == tuple(gegenbauer_2f1(n, lam))


def test_classical_q_closed_examples():
    assert classical_q_closed(H, 2) == UniPoly([F(1, 2), 0, 1])
    assert classical_q_closed(H, 1) == UniPoly([0, -1])
    # the sign convention is settled by q_1 = mu_1 - mu_0 x
    assert classical_q_closed(L0, 1) == UniPoly([1, -1]) == q_poly(L0, 1)


@pytest.mark.parametrize("spec", FAMILIES, ids=str)
def test_classical_q_closed_matches_moments(spec):
    for n in range(7):
        assert classical_q_closed(spec, n) == q_poly(spec, n)


def test_classical_rejects():
    with pytest.raises(UnsupportedSpecError):
        classical_poly(Explicit((1,)), 1)
    with pytest.raises(UnsupportedSpecError):
        classical_q_closed(Gegenbauer(F(0)), 2)
    with pytest.raises(OpdetError):
        JensenSeq(())
