"""End-to-end acceptance criteria.  Each test prints one PASS/FAIL line with
its runtime and budget; the lines are repeated in the terminal summary."""
import itertools
import time

from conftest import ACCEPTANCE
from spinnet import corpus as cp
from spinnet import verify as vf
from spinnet.qarith import ONE, QLaurent, QRatio, canonicalize, divides, qbinom, qfact, qint, qmultinom
from spinnet.shadow import shadow_eval, shadow_state_weight, sliced_to_shadow, tet_sym, theta_sym
from spinnet.sliced import CROSS_KINDS, evaluate, framing_factor


def R(v):
    return QRatio.of(v)


def record(num, title, ok, elapsed, budget, detail=""):
    ok = ok and elapsed < budget
    line = f"criterion {num} {title}: {'PASS' if ok else 'FAIL'} ({elapsed:.1f}s < {budget}s){'; ' + detail if detail else ''}"
    ACCEPTANCE[num] = line
    print(line)
    assert ok, line


def _corpus():
    return list(cp.closed_corpus(3))


def test_criterion_1_closed_forms():
    t = time.perf_counter()
    bad = []
    n = 0
    for A in range(7):
        for G in range(-2, 3):
            # (-1)^{2a} [2a+1] i^{4gc} q^{2g(c^2+c)}
            sign = -1 if A % 2 else 1
            expected = QLaurent.monomial(G * (A * A + 2 * A), phase=G * A) * qint(A + 1) * sign
            n += 1
            if evaluate(cp.unknot(A, G)) != R(expected):
                bad.append(("unknot", A, G))
    for A, B, C in cp.admissible_triples(6):
        s = (A + B + C) // 2
        num = qfact(s + 1) * qfact((A + B - C) // 2) * qfact((A + C - B) // 2) * qfact((B + C - A) // 2)
        expected = R(num if s % 2 == 0 else -num) / R(qfact(A) * qfact(B) * qfact(C))
        n += 1
        if evaluate(cp.theta(A, B, C)) != expected:
            bad.append(("theta", A, B, C))
    record(1, "closed forms", not bad, time.perf_counter() - t, 10, f"{n} cases, {len(bad)} failed")


def test_criterion_2_renormalized_symbols():
    t = time.perf_counter()
    bad = []
    triples = cp.admissible_triples(4)
    tets = cp.tet_colorings(4)
    for c in triples:
        if vf.bracket(cp.theta(*c)) != R(theta_sym(*c)):
            bad.append(c)
    for c in tets:
        if vf.bracket(cp.tet(*c)) != R(tet_sym(*c)):
            bad.append(c)
    record(2, "renormalized symbols", not bad, time.perf_counter() - t, 60,
           f"{len(triples)} theta, {len(tets)} tet, {len(bad)} failed")


def test_criterion_3_integrality():
    t = time.perf_counter()
    rep = vf.check_corpus_integrality(_corpus(), 3)
    record(3, "integrality", rep.passed, time.perf_counter() - t, 300, rep.summary())


def test_criterion_4_divisibility():
    t = time.perf_counter()
    rep = vf.check_corpus_divisibility(_corpus(), 3)
    ok = rep.passed
    twisted = 0
    for a, b in itertools.product((-2, -1, 0, 1, 2), repeat=2):
        body = canonicalize(vf.bracket(cp.twisted_link(2, a, b)))
        twisted += 1
        ok = ok and divides(qint(3), body)
    record(4, "divisibility", ok, time.perf_counter() - t, 300,
           f"{rep.summary()}; twisted links by [3]: {twisted}")


def test_criterion_5_engine_equivalence():
    t = time.perf_counter()
    diagrams = _corpus()
    crossing = sum(1 for d in diagrams if any(tl.kind in CROSS_KINDS for _, _, tl in d.tiles()))
    rep = vf.check_engine_equivalence(diagrams, 3)
    record(5, "engine equivalence", rep.passed and crossing >= 2, time.perf_counter() - t, 300,
           f"{rep.summary()}; {crossing} with crossings")


def test_criterion_6_single_weights():
    t = time.perf_counter()
    d1 = cp.twisted_link(2, 0, 0)
    p1 = sliced_to_shadow(d1)
    w1 = shadow_state_weight(p1, {0: 0, 1: 2, 2: 2, 3: 2})
    e1 = R(qint(3) * (qint(5) - ONE)) / R(qint(2) * qint(4))
    d2 = cp.planar_graph(2)
    p2 = sliced_to_shadow(d2)
    w2 = shadow_state_weight(p2, {0: 0, 1: 2, 2: 2, 3: 2, 4: 2, 5: 2, 6: 2})
    e2 = -R(qint(3) ** 2 * (qint(5) - ONE) ** 6) / R(qfact(4))
    ok = w1 == e1 and w2 == e2 and not w1.is_laurent() and not w2.is_laurent()
    for d, p in ((d1, p1), (d2, p2)):
        canonicalize(shadow_eval(p, framing_factor(d)))
    record(6, "single weights", ok, time.perf_counter() - t, 10, "both weights non-Laurent, both sums integral")


def test_criterion_7_identity_suites():
    t = time.perf_counter()
    reps = [
        vf.verify_orthogonality(4),
        vf.verify_racah(4),
        vf.verify_biedenharn_elliot(4),
        vf.verify_normalizations(4),
        vf.verify_r_vs_6j(3),
    ]
    detail = "; ".join(f"{r.name} {len(r.instances)} instances, {len(r.failures)} failed" for r in reps)
    record(7, "identity suites", all(r.passed for r in reps), time.perf_counter() - t, 600, detail)


def _compositions(total_max, max_len=4):
    for k in range(1, max_len + 1):
        for parts in itertools.product(range(total_max + 1), repeat=k):
            if sum(parts) <= total_max:
                yield list(parts)


def test_criterion_8_qmultinom():
    t = time.perf_counter()
    ok = True
    n = 0
    for parts in _compositions(10):
        m = qmultinom(parts)
        n += 1
        ok = ok and all(c.im == 0 and c.re > 0 for c in m.terms().values())
        if len(parts) >= 2:
            a1, a2, *rest = parts
            ok = ok and m == qmultinom([a1 + a2] + rest) * qbinom(a1 + a2, a1)
        ok = ok and R(m) * R(_prod(qfact(p) for p in parts)) == R(qfact(sum(parts)))
    record(8, "qmultinom", ok, time.perf_counter() - t, 5, f"{n} compositions")


def _prod(xs):
    out = ONE
    for x in xs:
        out = out * x
    return out


def test_criterion_9_half_twist():
    t = time.perf_counter()
    rep = vf.verify_half_twist(3)
    record(9, "half-twist lemma", rep.passed, time.perf_counter() - t, 30, rep.summary())
