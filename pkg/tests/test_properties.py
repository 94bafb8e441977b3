from fractions import Fraction as F

from hypothesis import given, settings
from hypothesis import strategies as st

from opdet import dets
from opdet.exactcore import UniPoly, det_exact, elem_sym
from opdet.measures import Gegenbauer, Hermite, Laguerre, NodeSet
from opdet.opoly import orth_poly, q_nodes, q_poly

from oracles import leibniz_det

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=7)
polys = st.lists(rationals, max_size=5).map(UniPoly)
specs = st.sampled_from([Hermite(), Laguerre(F(0)), Laguerre(F(3, 2)), Gegenbauer(F(1, 2)), Gegenbauer(F(3, 2))])


def square(n):
    return st.lists(st.lists(rationals, min_size=n, max_size=n), min_size=n, max_size=n)


@given(st.integers(1, 5).flatmap(square))
def test_det_matches_leibniz(m):
    assert det_exact(m) == leibniz_det(m)


@given(st.integers(1, 4).flatmap(lambda n: st.tuples(square(n), square(n))))
def test_det_multiplicative(pair):
    a, b = pair
    n = len(a)
    ab = [[sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)] for i in range(n)]
    assert det_exact(ab) == det_exact(a) * det_exact(b)


@given(st.integers(1, 5).flatmap(square))
def test_det_transpose(m):
    assert det_exact(m) == det_exact([list(r) for r in zip(*m)])


@given(polys, polys, polys)
def test_ring_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    assert a * b == b * a
    assert (a * b).derivative() == a.derivative() * b + a * b.derivative()


@given(polys, polys.filter(lambda p: not p.is_zero()))
def test_divmod_invariant(a, b):
    q, r = divmod(a, b)
    assert q * b + r == a
    assert r.is_zero() or r.degree < b.degree


@given(polys, polys, rationals)
def test_composition_evaluates(a, b, x):
    assert a(b)(x) == a(b(x))


@given(st.lists(rationals, max_size=5))
def test_vieta(roots):
    p = UniPoly.from_roots(roots)
    m = len(roots)
    for k in range(m + 1):
        assert p.coeff(m - k) == (-1) ** k * elem_sym(k, roots)


@settings(max_examples=40, deadline=None)
@given(specs, st.integers(0, 3), st.lists(rationals, min_size=2, max_size=3, unique=True))
def test_slater_antisymmetric(spec, n, ts):
    swapped = [ts[1], ts[0]] + ts[2:]
    assert dets.slater(spec, n, swapped) == -dets.slater(spec, n, ts)
    assert dets.symmetrized(spec, n, NodeSet.simple(swapped)) == dets.symmetrized(spec, n, NodeSet.simple(ts))


@settings(max_examples=40, deadline=None)
@given(specs, st.integers(1, 3), st.lists(rationals, min_size=1, max_size=3, unique=True))
def test_symmetrized_equals_constant_times_hankel(spec, n, ts):
    m = len(ts)
    b = dets.structure_constant("B", spec, n, m).value
    assert dets.symmetrized(spec, n, NodeSet.simple(ts)) == b * dets.hankel_r_det(spec, n, NodeSet.simple(ts))


@settings(max_examples=40, deadline=None)
@given(specs, st.integers(0, 5), rationals, rationals)
def test_q_nodes_splits_off_one_node(spec, n, t, x):
    # (s - x)^n (s - t) = (s - x)^{n+1} + (x - t)(s - x)^n
    lhs = q_nodes(spec, NodeSet.simple([t]), n)(x)
    assert lhs == q_poly(spec, n + 1)(x) + (x - t) * q_poly(spec, n)(x)


@settings(max_examples=25, deadline=None)
@given(specs, st.integers(1, 2), rationals, rationals.filter(lambda v: v != 0))
def test_confluent_limit_matches_wronskian(spec, n, t, h):
    # det[[p(t)], [p(t + h)]] / h as a polynomial in h: its value at h is the
    # simple-node determinant, its value at 0 the double-node one
    p = [orth_poly(spec, n + j) for j in range(2)]
    shifted = UniPoly([t, 1])
    d = det_exact([[q(t) for q in p], [q(shifted) for q in p]]).exact_div(UniPoly([0, 1]))
    assert d(h) == dets.symmetrized(spec, n, NodeSet.simple([t, t + h]))
    assert d(0) == dets.symmetrized(spec, n, NodeSet.of([t], [2])) == dets.wronskian(spec, n, 2, t)
