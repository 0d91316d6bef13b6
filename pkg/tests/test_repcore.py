import pytest
from hypothesis import given
from hypothesis import strategies as st

from oracles import (
    CG_111_011,
    PROJ_111_011,
    RMAT_11_M1_1_0_0,
    RMAT_HH_HH_HH,
    RMAT_HH_MH_H_H_MH,
    RMAT_HH_MH_H_MH_H,
    THETA_RAW_111,
    W_111_01M1,
    W_HH1_HH_M1,
    lp,
    rat,
)
from spinnet import repcore as rc
from spinnet.qarith import ONE, ZERO, QLaurent, QRatio, qint

COLORS = range(0, 5)


def test_admissibility():
    assert rc.is_admissible(1, 1, 0)
    assert rc.is_admissible(2, 2, 2)
    assert not rc.is_admissible(1, 1, 1)  # odd sum
    assert not rc.is_admissible(4, 1, 1)  # triangle
    assert not rc.is_admissible(-1, 1, 0)


def test_states():
    assert list(rc.states(0)) == [0]
    assert list(rc.states(3)) == [-3, -1, 1, 3]
    assert rc.is_state(2, 0) and not rc.is_state(2, 1)


# -- frozen reference values ------------------------------------------------------


def test_clebsch_gordan_reference():
    assert rc.cg_C(2, 2, 2, 0, 2, 2) == rat(CG_111_011)


def test_projector_reference():
    assert rc.proj_P(2, 2, 2, 0, 2, 2) == rat(PROJ_111_011)


def test_minimum_reference():
    assert rc.w_W(2, 2, 2, 0, 2, -2) == lp(W_111_01M1)
    assert rc.w_W(1, 1, 2, 1, 1, -2) == lp(W_HH1_HH_M1)


def test_rmatrix_reference():
    assert rc.rmat(1, 1, 1, 1, 1, 1) == lp(RMAT_HH_HH_HH)
    assert rc.rmat(1, 1, -1, 1, -1, 1) == lp(RMAT_HH_MH_H_MH_H)
    assert rc.rmat(1, 1, -1, 1, 1, -1) == lp(RMAT_HH_MH_H_H_MH)
    assert rc.rmat(2, 2, -2, 2, 0, 0) == lp(RMAT_11_M1_1_0_0)


def test_theta_raw_reference():
    assert rc.theta_raw(2, 2, 2) == rat(THETA_RAW_111)
    assert rc.theta_raw(1, 1, 1) == QRatio.of(ZERO)


def test_half_twist_values():
    assert rc.half_twist(1, 1) == QLaurent.monomial(3, phase=1)
    assert rc.half_twist(1, -1) == QLaurent.monomial(-3, phase=-1)
    assert rc.half_twist(0) == ONE
    with pytest.raises(ValueError):
        rc.half_twist(1, 0)


# -- structural properties --------------------------------------------------------


def test_weight_conservation():
    for A, B, C in [(1, 1, 2), (2, 2, 2), (2, 1, 3), (3, 3, 2)]:
        for U in rc.states(A):
            for V in rc.states(B):
                for T in rc.states(C):
                    if U + V != T:
                        assert rc.cg_C(A, B, C, U, V, T).is_zero()
                        assert rc.proj_P(A, B, C, U, V, T).is_zero()
                    if U + V + T != 0:
                        assert rc.w_W(A, B, C, U, V, T).is_zero()
                        assert rc.m_M(A, B, C, U, V, T).is_zero()
    for A, B in [(1, 2), (2, 2), (3, 1)]:
        for U in rc.states(A):
            for V in rc.states(B):
                for H in rc.states(B):
                    for K in rc.states(A):
                        if H + K != U + V:
                            assert rc.rmat(A, B, U, V, H, K).is_zero()


def test_inadmissible_is_zero():
    assert rc.cg_C(1, 1, 1, 1, 0, 1).is_zero()
    assert rc.w_W(4, 1, 1, 0, 1, -1).is_zero()


@pytest.mark.parametrize("A", COLORS)
def test_zero_color_degenerations(A):
    for U in rc.states(A):
        assert rc.cg_C(A, 0, A, U, 0, U) == QRatio.of(ONE)
        assert rc.proj_P(A, 0, A, U, 0, U) == QRatio.of(ONE)
        assert rc.cg_C(A, A, 0, U, -U, 0) == QRatio.of(rc.cup(A, U, -U))
        assert rc.proj_P(A, A, 0, U, -U, 0) == rc.cap(A, U, -U)
        assert rc.w_W(A, A, 0, U, -U, 0) == rc.cup(A, U, -U)
        assert rc.m_M(A, A, 0, U, -U, 0) == rc.cap(A, U, -U)


@pytest.mark.parametrize("A", COLORS)
def test_zigzag(A):
    for S in rc.states(A):
        for V in rc.states(A):
            tot = sum((rc.cap(A, S, U) * rc.cup(A, U, V) for U in rc.states(A)), QRatio.of(ZERO))
            assert tot == QRatio.of(ONE if S == V else ZERO)


@pytest.mark.parametrize("A", COLORS)
def test_cap_after_cup_is_unknot(A):
    tot = sum((rc.cup(A, U, -U) * rc.cap(A, U, -U) for U in rc.states(A)), QRatio.of(ZERO))
    assert tot == QRatio.of(rc.unknot_raw(A))


def test_unknot_raw():
    assert rc.unknot_raw(1) == -qint(2)
    assert rc.unknot_raw(2) == qint(3)


def _theta_from_tiles(A, B, C):
    tot = QRatio.of(ZERO)
    for U in rc.states(A):
        for V in rc.states(B):
            T = -U - V
            if rc.is_state(C, T):
                tot = tot + rc.w_W(A, B, C, U, V, T) * rc.m_M(A, B, C, U, V, T)
    return tot


def test_theta_from_min_and_max():
    assert _theta_from_tiles(1, 1, 0) == QRatio.of(-qint(2))
    for A, B, C in [(2, 2, 2), (1, 2, 1), (3, 2, 1), (4, 2, 2)]:
        assert _theta_from_tiles(A, B, C) == rc.theta_raw(A, B, C)


def _matmul(X, Y):
    return [
        [sum((X[i][k] * Y[k][j] for k in range(len(Y))), QRatio.of(ZERO)) for j in range(len(Y[0]))]
        for i in range(len(X))
    ]


@pytest.mark.parametrize("A,B", [(a, b) for a in range(4) for b in range(4)])
def test_rmatrix_inverse(A, B):
    # positive crossing V^a (x) V^b -> V^b (x) V^a, then negative crossing back
    cols = [(u, v) for u in rc.states(A) for v in rc.states(B)]
    mid = [(h, k) for h in rc.states(B) for k in rc.states(A)]
    R = [[QRatio.of(rc.rmat(A, B, u, v, h, k)) for (u, v) in cols] for (h, k) in mid]
    Rinv = [[QRatio.of(rc.rmat_inv(B, A, h, k, x, y)) for (h, k) in mid] for (x, y) in cols]
    prod = _matmul(Rinv, R)
    for i in range(len(cols)):
        for j in range(len(cols)):
            assert prod[i][j] == QRatio.of(ONE if i == j else ZERO)


@given(st.integers(0, 3), st.integers(0, 3), st.data())
def test_negative_crossing_is_bar_of_positive(A, B, data):
    U = data.draw(st.sampled_from(list(rc.states(A))))
    V = data.draw(st.sampled_from(list(rc.states(B))))
    n = data.draw(st.integers(0, 3))
    expected = rc.rmat(A, B, U, V, V - 2 * n, U + 2 * n).invert_variable()
    assert rc.rmat_inv(B, A, V, U, U + 2 * n, V - 2 * n) == expected


def test_matrix_shapes():
    y = rc.y_matrix(1, 1, 2)
    assert len(y) == 4 and len(y[0]) == 3
    r = rc.r_matrix(1, 2)
    assert len(r) == 6 and len(r[0]) == 6
