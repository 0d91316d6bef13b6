"""Elementary U_q(sl2) operators in the weight basis ``g^a_u``.

All colors and states are doubled integers (``A = 2a``, ``U = 2u``).
Functions named ``*_scaled`` return the coefficient multiplied by its
state-independent q-factorial denominator, which keeps them in the
Laurent ring; the state-sum engine uses these and divides once at the end.

Inadmissible color triples and invalid states give 0 rather than an error.
"""
from __future__ import annotations

from functools import lru_cache

from .qarith import ONE, ZERO, QLaurent, QRatio, qbinom, qfact, qint, ratio_reduce


def is_admissible(A: int, B: int, C: int) -> bool:
    """Admissibility of the doubled triple: integral sum and triangle inequalities."""
    if A < 0 or B < 0 or C < 0:
        return False
    if (A + B + C) % 2:
        return False
    return A + B >= C and B + C >= A and C + A >= B


def is_state(A: int, U: int) -> bool:
    return abs(U) <= A and (A - U) % 2 == 0


def states(A: int) -> range:
    """Doubled states ``-A, -A+2, ..., A`` of the doubled color ``A``."""
    return range(-A, A + 1, 2)


def _half(n: int) -> int:
    assert n % 2 == 0, n
    return n // 2


# ---------------------------------------------------------------------------
# Clebsch-Gordan symbol and relatives
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def cg_scaled(A: int, B: int, C: int, U: int, V: int, T: int) -> QLaurent:
    """``C^{a,b,c}_{u,v,t} * [2c]!``: the Y-vertex coefficient, a Laurent polynomial."""
    if not is_admissible(A, B, C):
        return ZERO
    if not (is_state(A, U) and is_state(B, V) and is_state(C, T)) or U + V != T:
        return ZERO
    # integer combinations (a+b-c etc.) of doubled colors
    abc = _half(A + B - C)
    bca = _half(B + C - A)
    cab = _half(C + A - B)
    ct = _half(C - T)
    sign = (-1) ** ((_half(B - V) - ct) % 2)
    # q^{((b-v)(b+v+1) - (a-u)(a+u+1))/2}, written in x = q^(1/4)
    xexp = ((B - V) * (B + V + 2) - (A - U) * (A + U + 2)) // 2
    total = ZERO
    for z in range(ct + 1):
        w = ct - z
        term = (
            qbinom(_half(A + U) + z, cab)
            * qbinom(_half(B + V) + w, bca)
            * qbinom(ct, z)
        )
        if term.is_zero():
            continue
        # q^{(z-w)(c+t+1)/2}
        term = term.shift((z - w) * (C + T + 2))
        total = total - term if z % 2 else total + term
    if total.is_zero():
        return ZERO
    pref = qfact(abc) * qfact(bca) * qfact(cab)
    # sqrt(-1)^{c-a-b}
    out = (total * pref).shift(xexp).times_i(_half(C - A - B))
    return -out if sign < 0 else out


def cg_C(A, B, C, U, V, T) -> QRatio:
    """Clebsch-Gordan coefficient ``C^{a,b,c}_{u,v,t}`` of the Y-vertex ``V^c -> V^a (x) V^b``."""
    return ratio_reduce(cg_scaled(A, B, C, U, V, T), qfact(C))


@lru_cache(maxsize=None)
def p_scaled(A, B, C, U, V, T) -> QLaurent:
    """``P^{a,b,c}_{u,v,t} * [2a]! [2b]!``."""
    c = cg_scaled(A, C, B, -U, T, V)
    if c.is_zero():
        return ZERO
    return c.shift(2 * U).times_i(U)


def proj_P(A, B, C, U, V, T) -> QRatio:
    """Coefficient of the projector ``P^c_{a,b}: V^a (x) V^b -> V^c``."""
    return ratio_reduce(p_scaled(A, B, C, U, V, T), qfact(A) * qfact(B))


@lru_cache(maxsize=None)
def w_W(A, B, C, U, V, T) -> QLaurent:
    """Coefficient of the trivalent minimum ``W^{a,b,c}: V^0 -> V^a (x) V^b (x) V^c``."""
    c = cg_scaled(A, B, C, U, V, -T)
    if c.is_zero():
        return ZERO
    return c.shift(-2 * T).times_i(-T)


@lru_cache(maxsize=None)
def m_scaled(A, B, C, U, V, T) -> QLaurent:
    """``M^{a,b,c}_{u,v,t} * [2a]! [2b]! [2c]!``."""
    p = p_scaled(A, B, C, U, V, -T)
    if p.is_zero():
        return ZERO
    return p.shift(-2 * T).times_i(-T)


def m_M(A, B, C, U, V, T) -> QRatio:
    """Coefficient of the trivalent maximum ``M^{a,b,c}: V^a (x) V^b (x) V^c -> V^0``."""
    return ratio_reduce(m_scaled(A, B, C, U, V, T), qfact(A) * qfact(B) * qfact(C))


def cup(A: int, U: int, V: int) -> QLaurent:
    """``[2a]! i^{2u} q^u`` if ``v = -u``, else 0."""
    if U != -V or not is_state(A, U):
        return ZERO
    return qfact(A) * QLaurent.monomial(2 * U, phase=U)


def cap_scaled(A: int, U: int, V: int) -> QLaurent:
    if U != -V or not is_state(A, U):
        return ZERO
    return QLaurent.monomial(2 * U, phase=U)


def cap(A: int, U: int, V: int) -> QRatio:
    """``i^{2u} q^u / [2a]!`` if ``v = -u``, else 0."""
    return ratio_reduce(cap_scaled(A, U, V), qfact(A))


# ---------------------------------------------------------------------------
# R-matrices
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _q_minus_qinv_pow(n: int, inverse: bool) -> QLaurent:
    base = QLaurent.from_terms({4: 1, -4: -1})
    if inverse:
        base = -base
    return base ** n


@lru_cache(maxsize=None)
def rmat(A: int, B: int, U: int, V: int, H: int, K: int) -> QLaurent:
    """Positive crossing ``R: V^a (x) V^b -> V^b (x) V^a``.

    Coefficient of ``g^b_h (x) g^a_k`` in ``R(g^a_u (x) g^b_v)``; nonzero only
    for ``h = v - n``, ``k = u + n`` with ``n >= 0``.
    """
    if not (is_state(A, U) and is_state(B, V) and is_state(B, H) and is_state(A, K)):
        return ZERO
    if K - U != V - H or K < U:
        return ZERO
    n = _half(K - U)
    coef = qfact(n) * _q_minus_qinv_pow(n, False) * qbinom(_half(A - U), n) * qbinom(_half(A + U) + n, n)
    if coef.is_zero():
        return ZERO
    # q^{2uv - n(u-v) - n(n+1)/2}
    xexp = 2 * U * V - 2 * n * (U - V) - 2 * n * (n + 1)
    return coef.shift(xexp)


@lru_cache(maxsize=None)
def rmat_inv(X: int, Y: int, S1: int, S2: int, H: int, K: int) -> QLaurent:
    """Negative crossing ``V^x (x) V^y -> V^y (x) V^x``, the inverse of the
    positive crossing ``V^y (x) V^x -> V^x (x) V^y``.

    Coefficient of ``g^y_h (x) g^x_k`` in the image of ``g^x_{s1} (x) g^y_{s2}``;
    nonzero only for ``h = s2 + n``, ``k = s1 - n`` with ``n >= 0``.
    """
    if not (is_state(X, S1) and is_state(Y, S2) and is_state(Y, H) and is_state(X, K)):
        return ZERO
    if H - S2 != S1 - K or H < S2:
        return ZERO
    n = _half(H - S2)
    # raised factor carries color y (state s2), lowered one color x (state s1)
    coef = qfact(n) * _q_minus_qinv_pow(n, True) * qbinom(_half(Y - S2), n) * qbinom(_half(Y + S2) + n, n)
    if coef.is_zero():
        return ZERO
    # q^{-2vu + n(u-v) + n(n+1)/2} with v = s1, u = s2
    xexp = -2 * S1 * S2 + 2 * n * (S2 - S1) + 2 * n * (n + 1)
    return coef.shift(xexp)


def half_twist(A: int, sign: int = 1) -> QLaurent:
    """Scalar of the half twist ``H_a = i^{2a} q^{a^2+a}`` (or its inverse)."""
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    # q^{a^2 + a} = x^{A^2 + 2A}
    return QLaurent.monomial(sign * (A * A + 2 * A), phase=sign * A)


# ---------------------------------------------------------------------------
# closed forms used as references
# ---------------------------------------------------------------------------


def theta_raw(A: int, B: int, C: int) -> QRatio:
    """Un-renormalized theta graph value
    ``(-1)^{a+b+c} [a+b+c+1]! [a+b-c]! [a+c-b]! [b+c-a]! / ([2a]! [2b]! [2c]!)``."""
    if not is_admissible(A, B, C):
        return QRatio.of(ZERO)
    s = _half(A + B + C)
    num = qfact(s + 1) * qfact(_half(A + B - C)) * qfact(_half(A + C - B)) * qfact(_half(B + C - A))
    if s % 2:
        num = -num
    return ratio_reduce(num, qfact(A) * qfact(B) * qfact(C))


def unknot_raw(A: int) -> QLaurent:
    """``(-1)^{2a} [2a+1]``."""
    v = qint(A + 1)
    return -v if A % 2 else v


def y_matrix(A: int, B: int, C: int):
    """Matrix of ``Y^{a,b}_c``: rows ``(u, v)`` on ``V^a (x) V^b``
    lexicographic in doubled states, columns ``t`` on ``V^c``."""
    rows = [(u, v) for u in states(A) for v in states(B)]
    return [[cg_C(A, B, C, u, v, t) for t in states(C)] for (u, v) in rows]


def r_matrix(A: int, B: int):
    """Matrix of the positive crossing: rows ``(h, k)`` on ``V^b (x) V^a``,
    columns ``(u, v)`` on ``V^a (x) V^b``, both lexicographic."""
    rows = [(h, k) for h in states(B) for k in states(A)]
    cols = [(u, v) for u in states(A) for v in states(B)]
    return [[rmat(A, B, u, v, h, k) for (u, v) in cols] for (h, k) in rows]


def one_if(cond: bool) -> QLaurent:
    return ONE if cond else ZERO
