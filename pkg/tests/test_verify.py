import json

import pytest

from spinnet import corpus as cp
from spinnet import verify as vf
from spinnet.qarith import ONE, NotIntegral, QRatio, canonicalize, qfact, qint
from spinnet.shadow import tet_sym, theta_sym, unknot_sym
from spinnet.sliced import evaluate


def R(v):
    return QRatio.of(v)


# -- renormalization ----------------------------------------------------------------


def test_graph_combinatorics_of_theta():
    g = vf.GraphCombinatorics.from_diagram(cp.theta(2, 2, 2))
    assert sorted(g.edges) == [(2, 1)] * 3
    assert g.vertices == ((2, 2, 2), (2, 2, 2))
    assert g.factor() == R(qfact(2) ** 3)


def test_unknot_factor_is_one():
    assert vf.GraphCombinatorics.from_diagram(cp.unknot(3)).factor() == R(ONE)


@pytest.mark.parametrize("t", cp.admissible_triples(4))
def test_renormalized_theta(t):
    assert vf.bracket(cp.theta(*t)) == R(theta_sym(*t))


@pytest.mark.parametrize("cols", cp.tet_colorings(2))
def test_renormalized_tet(cols):
    assert vf.renormalize(evaluate(cp.tet(*cols)), cp.tet(*cols)) == R(tet_sym(*cols))


def test_raw_theta_is_not_integral():
    with pytest.raises(NotIntegral):
        vf.check_integrality(evaluate(cp.theta(2, 2, 2)))


# -- divisibility ---------------------------------------------------------------------


def test_divisibility_examples():
    res = vf.check_divisibility(theta_sym(2, 2, 2), [2, 2, 2])
    assert res == {2: True}
    assert vf.check_divisibility(qint(4), [1, 2]) == {1: True, 2: False}
    assert vf.check_divisibility(canonicalize(unknot_sym(3)), [0, 3]) == {0: True, 3: True}


# -- identity suites on small ranges ----------------------------------------------------


@pytest.mark.parametrize(
    "fn,m",
    [
        (vf.verify_fusion, 2),
        (vf.verify_whitehead, 2),
        (vf.verify_orthogonality, 2),
        (vf.verify_racah, 2),
        (vf.verify_biedenharn_elliot, 2),
        (vf.verify_normalizations, 3),
        (vf.verify_crossed_tet, 2),
        (vf.verify_r_vs_6j, 2),
        (vf.verify_half_twist, 2),
    ],
)
def test_suites_pass_small(fn, m):
    rep = fn(m)
    assert rep.passed, rep.render()
    assert len(rep.instances) > 5


def test_racah_with_unshared_denominators_fails():
    rep = vf.verify_racah(2, denominators="unshared")
    assert not rep.passed
    assert any(i.rhs == "division by zero" for i in rep.failures)


def test_r_vs_6j_with_renormalized_symbols_fails():
    assert not vf.verify_r_vs_6j(2, normalized=True).passed


def test_boundary_integrality():
    rep = vf.verify_boundary_integrality(cp.open_corpus(1))
    assert rep.passed, rep.render()


def test_boundary_factor():
    d = cp.DiagramBuilder().cup(0, 2).build()
    assert vf.boundary_factor(d) == R(ONE)
    # the capped strand does not reach the top
    d = cp.DiagramBuilder((2, 2, 2)).cap(1).build()
    assert vf.boundary_factor(d) == R(qfact(2))


# -- corpus checks --------------------------------------------------------------------------


SMALL = list(cp.closed_corpus(2, twists=(-1, 0, 1)))


def test_corpus_checks_small():
    assert vf.check_corpus_integrality(SMALL, 2).passed
    assert vf.check_corpus_divisibility(SMALL, 2).passed
    assert vf.check_engine_equivalence(SMALL, 2).passed


def test_corpus_integrality_flags_blackboard_phase():
    rep = vf.check_corpus_integrality([cp.theta(1, 1, 2), cp.unknot(1, 1)])
    assert rep.passed
    assert "m=1" in rep.instances[1].detail


# -- reports ----------------------------------------------------------------------------------


def test_report_summary_and_render():
    rep = vf.IdentityReport("demo", 2)
    rep.add((1, 2), qint(2), qint(2))
    rep.add((3, 4), qint(2), qint(3), "off by one")
    assert not rep.passed and len(rep.failures) == 1
    assert rep.summary() == "demo (max doubled color 2): FAIL, 2 instances, 1 failed"
    text = rep.render()
    assert "FAIL 3 4  off by one" in text and "ok   1 2" not in text
    assert "ok   1 2" in rep.render(verbose=True)
    data = json.loads(json.dumps(rep.to_json()))
    assert data["failed"] == 1 and data["instances"][1]["rhs"] == "q^2 + 1 + q^-2"


def test_empty_report_does_not_pass():
    assert not vf.IdentityReport("empty", None).passed


def test_render_value():
    assert vf.render_value(None) == "-"
    assert vf.render_value("text") == "text"
    assert vf.render_value(R(ONE) / R(qint(2))) == "(q) / (q^2 + 1)"
