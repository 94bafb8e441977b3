import json
from decimal import Decimal
from fractions import Fraction as F

import pytest

from opdet import dets
from opdet.errors import DuplicateNodesError, OpdetError, PlanInfeasibleError, UnsupportedSpecError
from opdet.exactcore import UniPoly
from opdet.measures import Explicit, Gegenbauer, Hermite, Laguerre, NodeSet, moment
from opdet.verify import (
    IdentityId,
    SamplePlan,
    default_specs_for,
    double_gap_conjecture,
    jensen_convergence,
    positivity_scan,
    printed_constant_cases,
    selberg_integral,
    supports,
    verify_identity,
)
from opdet.verify.plan import compositions, eval_points

H = Hermite()
L0 = Laguerre(F(0))
SMALL = SamplePlan(n_max=2, m_max=2, tuples_per_case=3, tuples_small=2, mult_total_max=3)


def test_selberg_examples():
    for x in (F(0), F(5), F(-1, 3)):
        assert selberg_integral(H, 1, NodeSet(), extra_x=x) == -x
    assert selberg_integral(H, 1, NodeSet.of([0], [2])) == F(1, 2)
    assert selberg_integral(L0, 0, NodeSet.simple([1])) == 1


def test_selberg_two_variables_by_hand():
    # (1/2) * integral (s1 - s2)^2 = mu_2 mu_0 - mu_1^2 = det M_1
    for spec in (H, L0, Gegenbauer(F(1, 2))):
        assert selberg_integral(spec, 2) == moment(spec, 2) * moment(spec, 0) - moment(spec, 1) ** 2


def test_selberg_cap():
    with pytest.raises(OpdetError):
        selberg_integral(H, 5)


def test_verify_examples():
    plan = SamplePlan(n_max=2, m_max=3, seed=7)
    rep = verify_identity(IdentityId.COR_LEC_R, H, plan)
    assert rep.passed and rep.cases_run > 0
    rep = verify_identity(IdentityId.PN_DETQ, Explicit(tuple(moment(L0, k) for k in range(8))), SMALL)
    assert rep.passed


def test_lec_r_hand_case():
    # W_{1,3} at (0, 1, 2) = B_{1,3} r_0(0, 1, 2)
    lhs = dets.symmetrized(H, 1, NodeSet.simple([0, 1, 2]))
    b = dets.structure_constant("B", H, 1, 3).value
    assert (lhs, b) == (F(3, 16), F(-1, 8))
    assert lhs == b * dets.hankel_r_det(H, 1, NodeSet.simple([0, 1, 2]))


def test_delta_int_hand_case():
    nodes = NodeSet.of([0], [2])
    c = dets.structure_constant("Cvec", H, 1, [2]).value
    assert c == F(1, 2)
    assert dets.slater_general(H, 1, nodes) == F(1, 4) == c * selberg_integral(H, 1, nodes)


@pytest.mark.parametrize("identity", list(IdentityId), ids=lambda i: i.value)
def test_every_identity_passes_on_a_small_plan(identity):
    specs = default_specs_for(identity)
    assert specs
    for spec in specs[:2]:
        rep = verify_identity(identity, spec, SMALL)
        assert rep.passed, rep.to_json()["failures"][:2]
        assert rep.cases_run > 0


def test_wrong_constant_is_detected(monkeypatch):
    real = dets.structure_constant

    def printed(kind, spec, n, mults, printed=False):
        return real(kind, spec, n, mults, printed=True)

    monkeypatch.setattr(dets, "structure_constant", printed)
    rep = verify_identity(IdentityId.MAIN2_R, H, SMALL)
    assert not rep.passed
    assert rep.to_json()["status"] == "fail"


def test_printed_constant_cases():
    cases = printed_constant_cases()
    assert [c["lhs"] for c in cases] == [F(1, 4), F(3, 4), F(3, 8), F(1, 16)]
    for c in cases:
        assert c["lhs"] == c["corrected"]
        assert c["printed"] == 2 * c["corrected"] != c["lhs"]


def test_report_schema_and_determinism():
    a = verify_identity(IdentityId.LEC_Q, L0, SMALL).to_json()
    b = verify_identity(IdentityId.LEC_Q, L0, SMALL).to_json()
    assert json.dumps(a) == json.dumps(b)
    assert {"identity", "spec", "plan", "cases_run", "failures", "status"} <= set(a)
    assert set(a["plan"]) >= {"seed", "ranges"}
    assert a["spec"] == "laguerre:alpha=0"


def test_unsupported_and_infeasible():
    with pytest.raises(UnsupportedSpecError):
        verify_identity(IdentityId.HERMITE_MAIN, L0, SMALL)
    assert not supports(IdentityId.GL_CONVERGENCE, H)
    with pytest.raises(PlanInfeasibleError):
        SamplePlan(pool=(F(0),), extended_pool=()).node_tuples(2, 1)


def test_short_explicit_moments_are_skipped():
    spec = Explicit(tuple(moment(H, k) for k in range(5)))
    rep = verify_identity(IdentityId.LEC_R, spec, SMALL)
    assert rep.passed and rep.cases_skipped > 0


def test_plan_helpers():
    comps = list(compositions(3, 2))
    assert comps == [(1,), (2,), (1, 1), (3,), (1, 2), (2, 1)]
    pts = eval_points(5)
    assert len(set(pts)) == 5
    tuples = SamplePlan().node_tuples(3, 20, "x")
    assert len(set(tuples)) == 20 and all(len(set(t)) == 3 for t in tuples)
    assert tuples == SamplePlan().node_tuples(3, 20, "x")
    assert tuples != SamplePlan(seed=1).node_tuples(3, 20, "x")


def test_positivity_examples():
    rep = positivity_scan(H, 1, [2], trials=50)
    assert rep.passed and rep.cases_run >= 50
    assert dets.wronskian(H, 1, 2, 0) == F(1, 4)
    assert positivity_scan(H, 1, [2, 2], nodes=[0, 1]).passed
    with pytest.raises(DuplicateNodesError):
        positivity_scan(H, 1, [2, 2], nodes=[1, 1])
    with pytest.raises(OpdetError):
        positivity_scan(H, 1, [3])


def test_jensen_convergence_table():
    table = jensen_convergence(L0, F(1, 2), 64)
    assert table.passed and table.trend_ok
    assert table.rows[0].value == F(1, 2)
    assert table.error_at(64) < table.error_at(16)
    assert table.error_at(64) < Decimal("0.01")
    zero = jensen_convergence(L0, 0, 5)
    assert all(r.value == 1 and r.error == 0 for r in zero.rows)
    assert table.csv_rows()[0] == ["m", "exact", "decimal", "target", "error", "wronskian_check"]


def test_jensen_convergence_rejects():
    with pytest.raises(UnsupportedSpecError):
        jensen_convergence(H, F(1, 2), 4)
    with pytest.raises(OpdetError):
        jensen_convergence(L0, F(-1), 4)


def test_double_gap_is_advisory():
    rep = double_gap_conjecture(H, SMALL)
    assert rep.advisory and rep.to_json()["advisory"] is True


def test_wronskian_witness_polynomial():
    assert dets.wronskian_poly(H, 2, 2) == UniPoly([F(3, 32), 0, 0, 0, F(1, 8)])
