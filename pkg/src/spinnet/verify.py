"""Renormalization, integrality checks and exhaustive identity verifiers.

Every verifier returns an :class:`IdentityReport`.  Sums over an internal
color run over every doubled value the admissibility conditions allow, with
inadmissible symbols counting as zero, so the checks are exact and complete
for each instance.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable

from . import repcore as rc
from .qarith import (
    ONE,
    ZERO,
    BracketValue,
    NotIntegral,
    QLaurent,
    QRatio,
    canonicalize,
    divides,
    qfact,
    qint,
    ratio_reduce,
    render_bracket,
    render_ratio,
)
from .shadow import (
    shadow_eval,
    sliced_to_shadow,
    tet_sym,
    theta_sym,
    unknot_sym,
)
from .sliced import SlicedDiagram, evaluate, evaluate_matrix, framing_factor


def _h(X: int) -> int:
    # q^{x^2+x} as a power of q^(1/4), for doubled X
    return X * X + 2 * X


def _phase(i_exp: int, x_exp: int) -> QLaurent:
    return QLaurent.monomial(x_exp, phase=i_exp)


def _R(v) -> QRatio:
    return QRatio.of(v)


# ---------------------------------------------------------------------------
# renormalization and integrality
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class GraphCombinatorics:
    """Edge colors with their Euler flag, and the vertex color triples."""

    edges: tuple  # ((color, euler), ...)
    vertices: tuple  # ((a, b, c), ...)

    @classmethod
    def from_diagram(cls, d: SlicedDiagram) -> "GraphCombinatorics":
        return cls(
            tuple((e.color, e.euler) for e in d.edges),
            tuple(tuple(t) for t in d.vertex_triples()),
        )

    def factor(self) -> QRatio:
        num = ONE
        for c, euler in self.edges:
            if euler:
                num = num * qfact(c)
        return ratio_reduce(num, vertex_denominator(self.vertices))


def vertex_denominator(triples) -> QLaurent:
    den = ONE
    for A, B, C in triples:
        den = den * qfact((A + B - C) // 2) * qfact((B + C - A) // 2) * qfact((C + A - B) // 2)
    return den


def renormalize(raw: QRatio, g) -> QRatio:
    """``raw * prod_{euler(e)=1} [2c_e]! / prod_v [a+b-c]![b+c-a]![c+a-b]!``.

    ``g`` is a :class:`GraphCombinatorics` or a sliced diagram.
    """
    if isinstance(g, SlicedDiagram):
        g = GraphCombinatorics.from_diagram(g)
    return _R(raw) * g.factor()


def bracket(d: SlicedDiagram) -> QRatio:
    """Renormalized value of a closed diagram."""
    return renormalize(evaluate(d), d)


def check_integrality(v) -> BracketValue:
    """Canonical form of ``v``; raises :class:`NotIntegral` if it has none."""
    return canonicalize(v)


def check_divisibility(v, colors: Iterable[int]) -> dict:
    """``{color: [color+1] divides body}`` for each distinct doubled color."""
    if not isinstance(v, BracketValue):
        v = canonicalize(v)
    return {c: divides(qint(c + 1), v) for c in sorted(set(colors))}


# ---------------------------------------------------------------------------
# reports
# ---------------------------------------------------------------------------


def render_value(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, str):
        return v
    try:
        return render_bracket(canonicalize(v))
    except NotIntegral:
        return render_ratio(_R(v))


@dataclass
class Instance:
    inputs: tuple
    ok: bool
    lhs: object = None
    rhs: object = None
    detail: str = ""

    def to_json(self) -> dict:
        out = {"inputs": list(self.inputs), "ok": self.ok}
        if self.lhs is not None:
            out["lhs"] = render_value(self.lhs)
        if self.rhs is not None:
            out["rhs"] = render_value(self.rhs)
        if self.detail:
            out["detail"] = self.detail
        return out


@dataclass
class IdentityReport:
    name: str
    max_color: int | None
    instances: list = field(default_factory=list)
    notes: list = field(default_factory=list)

    def add(self, inputs, lhs, rhs, detail=""):
        self.instances.append(Instance(tuple(inputs), _R(lhs) == _R(rhs), lhs, rhs, detail))

    @property
    def failures(self) -> list:
        return [i for i in self.instances if not i.ok]

    @property
    def passed(self) -> bool:
        return bool(self.instances) and not self.failures

    def summary(self) -> str:
        rng = "" if self.max_color is None else f" (max doubled color {self.max_color})"
        verdict = "PASS" if self.passed else "FAIL"
        nf = len(self.failures)
        return f"{self.name}{rng}: {verdict}, {len(self.instances)} instances, {nf} failed"

    def render(self, verbose: bool = False, limit: int = 20) -> str:
        lines = [self.summary()]
        lines += [f"  note: {n}" for n in self.notes]
        shown = self.instances if verbose else self.failures[:limit]
        for inst in shown:
            tag = "ok  " if inst.ok else "FAIL"
            args = " ".join(str(x) for x in inst.inputs)
            line = f"  {tag} {args}"
            if inst.detail:
                line += f"  {inst.detail}"
            if inst.lhs is not None or inst.rhs is not None:
                if verbose or not inst.ok:
                    line += f"\n       lhs = {render_value(inst.lhs)}\n       rhs = {render_value(inst.rhs)}"
            lines.append(line)
        if not verbose and len(self.failures) > limit:
            lines.append(f"  ... {len(self.failures) - limit} more failures")
        return "\n".join(lines)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "max_color": self.max_color,
            "passed": self.passed,
            "count": len(self.instances),
            "failed": len(self.failures),
            "notes": list(self.notes),
            "instances": [i.to_json() for i in self.instances],
        }


# ---------------------------------------------------------------------------
# recoupling identities
# ---------------------------------------------------------------------------


def _adm(*triples) -> bool:
    return all(rc.is_admissible(*t) for t in triples)


def _range(hi: int):
    return range(hi + 1)


def verify_fusion(max_color: int = 3) -> IdentityReport:
    """``Id = sum_c unknot(c)/theta(a,b,c) Y^{a,b}_c P^c_{a,b}`` entrywise on
    ``V^a (x) V^b``, with un-renormalized circle and theta values; and its
    closure ``unknot(a) unknot(b) = sum_c unknot(c)`` in renormalized symbols."""
    rep = IdentityReport("fusion", max_color)
    for A, B in itertools.product(_range(max_color), repeat=2):
        cs = [C for C in range(abs(A - B), A + B + 1, 2)]
        coef = {C: _R(rc.unknot_raw(C)) / rc.theta_raw(A, B, C) for C in cs}
        for U, V, U2 in itertools.product(rc.states(A), rc.states(B), rc.states(A)):
            V2 = U + V - U2
            if not rc.is_state(B, V2):
                continue
            rhs = QRatio.of(ZERO)
            for C in cs:
                rhs = rhs + coef[C] * rc.cg_C(A, B, C, U2, V2, U + V) * rc.proj_P(A, B, C, U, V, U + V)
            rep.add(("op", A, B, U, V, U2, V2), rc.one_if(U == U2), rhs)
        rep.add(("closed", A, B), unknot_sym(A) * unknot_sym(B), sum((unknot_sym(C) for C in cs), ZERO))
    return rep


def verify_whitehead(max_color: int = 3) -> IdentityReport:
    """Whitehead move closed against a second copy:
    ``delta_{jk} theta(a,b,j) theta(c,d,j) / unknot(j)
    = sum_i unknot(i) tet(a,b,j,c,d,i) tet(a,b,k,c,d,i) / (theta(a,d,i) theta(b,c,i))``.
    At ``j = k = 0`` this is the fusion rule."""
    rep = IdentityReport("whitehead", max_color)
    r = _range(max_color)
    for a, b, c, d in itertools.product(r, repeat=4):
        js = [j for j in r if _adm((a, b, j), (c, d, j))]
        for j, k in itertools.product(js, repeat=2):
            rhs = QRatio.of(ZERO)
            for i in range(0, min(a + d, b + c) + 1):
                if not _adm((a, d, i), (b, c, i)):
                    continue
                num = unknot_sym(i) * tet_sym(a, b, j, c, d, i) * tet_sym(a, b, k, c, d, i)
                rhs = rhs + ratio_reduce(num, theta_sym(a, d, i) * theta_sym(b, c, i))
            lhs = ratio_reduce(theta_sym(a, b, j) * theta_sym(c, d, j), unknot_sym(j)) if j == k else ZERO
            rep.add((a, b, c, d, j, k), lhs, rhs)
    return rep


def verify_orthogonality(max_color: int = 4) -> IdentityReport:
    """``delta_{bd} theta(a,b,c) theta(e,f,b) / unknot(b) = sum_u
    i^{2(d-b)} q^{d^2+d-b^2-b} unknot(u) tet(a,b,c,f,u,e) tet(a,c,d,f,e,u)
    / (theta(a,e,u) theta(c,f,u))``."""
    rep = IdentityReport("orthogonality", max_color)
    r = _range(max_color)
    for a, c, e, f in itertools.product(r, repeat=4):
        bs = [b for b in r if _adm((a, b, c), (f, b, e))]
        ds = [d for d in r if _adm((a, c, d), (f, e, d))]
        for b, d in itertools.product(bs, ds):
            ph = _phase(d - b, _h(d) - _h(b))
            rhs = QRatio.of(ZERO)
            for u in range(0, min(a + e, c + f) + 1):
                if not _adm((a, e, u), (c, f, u)):
                    continue
                num = ph * unknot_sym(u) * tet_sym(a, b, c, f, u, e) * tet_sym(a, c, d, f, e, u)
                rhs = rhs + ratio_reduce(num, theta_sym(a, e, u) * theta_sym(c, f, u))
            lhs = ratio_reduce(theta_sym(a, b, c) * theta_sym(e, f, b), unknot_sym(b)) if b == d else ZERO
            rep.add((a, b, c, d, e, f), lhs, rhs)
    return rep


# Two candidate theta denominators for the Racah sum: theta(a,d,u) theta(b,e,u)
# are the triples shared by the two tetrahedra on the right, while
# theta(a,b,u) theta(b,d,u) use triples that do not occur in them.
RACAH_DENOMINATORS = {
    "shared": lambda a, b, d, e, u: ((a, d, u), (b, e, u)),
    "unshared": lambda a, b, d, e, u: ((a, b, u), (b, d, u)),
}


def verify_racah(max_color: int = 4, denominators: str = "shared") -> IdentityReport:
    """``i^{2(a+b-c)} q^{a^2+a+b^2+b-c^2-c} tet(a,b,c,d,e,f) = sum_u
    i^{2(u+f-e-d)} q^{u^2+u+f^2+f-d^2-d-e^2-e} unknot(u) tet(a,e,f,b,d,u)
    tet(a,c,b,e,u,d) / (theta . theta)``; ``denominators`` picks the pair of
    theta factors (see ``RACAH_DENOMINATORS``)."""
    pick = RACAH_DENOMINATORS[denominators]
    rep = IdentityReport("racah" if denominators == "shared" else f"racah[{denominators}]", max_color)
    r = _range(max_color)
    for a, b, c in itertools.product(r, repeat=3):
        if not rc.is_admissible(a, b, c):
            continue
        for d, e, f in itertools.product(r, repeat=3):
            if not _adm((a, e, f), (d, b, f), (d, e, c)):
                continue
            lhs = _phase(a + b - c, _h(a) + _h(b) - _h(c)) * tet_sym(a, b, c, d, e, f)
            rhs = QRatio.of(ZERO)
            for u in range(0, a + b + d + e + 1):
                t1 = tet_sym(a, e, f, b, d, u)
                if t1.is_zero():
                    continue
                t2 = tet_sym(a, c, b, e, u, d)
                if t2.is_zero():
                    continue
                den = ONE
                for t in pick(a, b, d, e, u):
                    den = den * theta_sym(*t)
                if den.is_zero():
                    rhs = None
                    break
                ph = _phase(u + f - e - d, _h(u) + _h(f) - _h(d) - _h(e))
                rhs = rhs + ratio_reduce(ph * unknot_sym(u) * t1 * t2, den)
            if rhs is None:
                rep.instances.append(Instance((a, b, c, d, e, f), False, lhs, "division by zero"))
                continue
            rep.add((a, b, c, d, e, f), lhs, rhs)
    return rep


def verify_biedenharn_elliot(max_color: int = 4) -> IdentityReport:
    """``tet(a,b,c,d,e,f) tet(g,h,e,c,d,i) / theta(c,e,d) = sum_u unknot(u)
    tet(a,e,f,g,u,h) tet(d,b,f,u,g,i) tet(a,b,c,i,h,u)
    / (theta(a,h,u) theta(b,i,u) theta(f,g,u))``."""
    rep = IdentityReport("biedenharn-elliot", max_color)
    r = _range(max_color)
    for a, b, c in itertools.product(r, repeat=3):
        if not rc.is_admissible(a, b, c):
            continue
        for e, f in itertools.product(r, repeat=2):
            if not rc.is_admissible(a, e, f):
                continue
            for d in r:
                if not _adm((d, b, f), (d, e, c)):
                    continue
                for g, h in itertools.product(r, repeat=2):
                    if not rc.is_admissible(g, h, e):
                        continue
                    for i in r:
                        if not _adm((g, d, i), (c, h, i)):
                            continue
                        lhs = ratio_reduce(
                            tet_sym(a, b, c, d, e, f) * tet_sym(g, h, e, c, d, i), theta_sym(c, e, d)
                        )
                        rhs = QRatio.of(ZERO)
                        for u in range(0, min(a + h, b + i, f + g) + 1):
                            if not _adm((a, h, u), (b, i, u), (f, g, u)):
                                continue
                            num = (
                                unknot_sym(u)
                                * tet_sym(a, e, f, g, u, h)
                                * tet_sym(d, b, f, u, g, i)
                                * tet_sym(a, b, c, i, h, u)
                            )
                            if num.is_zero():
                                continue
                            den = theta_sym(a, h, u) * theta_sym(b, i, u) * theta_sym(f, g, u)
                            rhs = rhs + ratio_reduce(num, den)
                        rep.add((a, b, c, d, e, f, g, h, i), lhs, rhs)
    return rep


def verify_normalizations(max_color: int = 4) -> IdentityReport:
    """Both tetrahedron normalizations:
    ``delta_{b0} unknot(a) unknot(c) = sum_u unknot(u) tet(a,a,b,c,c,u) / theta(a,c,u)`` and
    ``theta(a,b,c) i^{4b} q^{2(b^2+b)} = sum_u i^{2(u+a-2c)} q^{u^2+u+a^2+a-2(c^2+c)}
    unknot(u) tet(a,b,c,u,b,c) / theta(b,c,u)``."""
    rep = IdentityReport("normalizations", max_color)
    r = _range(max_color)
    for a, b, c in itertools.product(r, repeat=3):
        if _adm((a, a, b), (c, c, b)):
            rhs = QRatio.of(ZERO)
            for u in range(abs(a - c), a + c + 1, 2):
                rhs = rhs + ratio_reduce(unknot_sym(u) * tet_sym(a, a, b, c, c, u), theta_sym(a, c, u))
            lhs = unknot_sym(a) * unknot_sym(c) if b == 0 else ZERO
            rep.add(("first", a, b, c), lhs, rhs)
        if rc.is_admissible(a, b, c):
            rhs = QRatio.of(ZERO)
            for u in range(abs(b - c), b + c + 1, 2):
                ph = _phase(u + a - 2 * c, _h(u) + _h(a) - 2 * _h(c))
                num = ph * unknot_sym(u) * tet_sym(a, b, c, u, b, c)
                rhs = rhs + ratio_reduce(num, theta_sym(b, c, u))
            lhs = theta_sym(a, b, c) * _phase(2 * b, 2 * _h(b))
            rep.add(("second", a, b, c), lhs, rhs)
    return rep


def verify_crossed_tet(max_color: int = 3) -> IdentityReport:
    """Closed form with crossing phase against the sliced evaluation of the
    crossed tetrahedron, both crossing signs."""
    from .corpus import crossed_tet, tet_colorings
    from .shadow import crossed_tet_sym

    rep = IdentityReport("crossed-tet", max_color)
    for cols in tet_colorings(max_color):
        for s in (1, -1):
            rep.add(cols + (s,), bracket(crossed_tet(*cols, sign=s)), crossed_tet_sym(*cols, sign=s))
    return rep


# ---------------------------------------------------------------------------
# operator identities
# ---------------------------------------------------------------------------


def verify_r_vs_6j(max_color: int = 3, normalized: bool = False) -> IdentityReport:
    """``R^{t,w}_{u,v} = sum_c C^{b,a,c}_{t,w,u+v} i^{2(c-a-b)} q^{c^2+c-a^2-a-b^2-b}
    unknot(c) / theta(a,b,c) P^{a,b,c}_{u,v,u+v}`` for every entry.

    The circle and theta here are the un-renormalized values; with
    ``normalized=True`` the renormalized symbols are used instead, which
    does not hold and is kept for comparison."""
    rep = IdentityReport("r-vs-6j" + ("[renormalized]" if normalized else ""), max_color)
    for A, B in itertools.product(_range(max_color), repeat=2):
        cs = list(range(abs(A - B), A + B + 1, 2))
        coef = {}
        for C in cs:
            ph = _phase(C - A - B, _h(C) - _h(A) - _h(B))
            if normalized:
                coef[C] = ratio_reduce(ph * unknot_sym(C), theta_sym(A, B, C))
            else:
                coef[C] = _R(ph * rc.unknot_raw(C)) / rc.theta_raw(A, B, C)
        for U, V in itertools.product(rc.states(A), rc.states(B)):
            for T, W in itertools.product(rc.states(B), rc.states(A)):
                lhs = rc.rmat(A, B, U, V, T, W)
                rhs = QRatio.of(ZERO)
                if T + W == U + V:
                    for C in cs:
                        rhs = rhs + rc.cg_C(B, A, C, T, W, U + V) * coef[C] * rc.proj_P(A, B, C, U, V, U + V)
                rep.add((A, B, U, V, T, W), lhs, rhs)
    return rep


def verify_half_twist(max_color: int = 3) -> IdentityReport:
    """``R o Y^{a,b}_c = (H_b^-1 (x) H_a^-1) o Y^{b,a}_c o H_c`` entrywise."""
    rep = IdentityReport("half-twist", max_color)
    for A, B, C in itertools.product(_range(max_color), repeat=3):
        if not rc.is_admissible(A, B, C):
            continue
        scal = rc.half_twist(B, -1) * rc.half_twist(A, -1) * rc.half_twist(C, 1)
        for T in rc.states(C):
            for H, K in itertools.product(rc.states(B), rc.states(A)):
                lhs = QRatio.of(ZERO)
                for U in rc.states(A):
                    V = T - U
                    if rc.is_state(B, V):
                        lhs = lhs + _R(rc.rmat(A, B, U, V, H, K)) * rc.cg_C(A, B, C, U, V, T)
                rhs = _R(scal) * rc.cg_C(B, A, C, H, K, T)
                rep.add((A, B, C, T, H, K), lhs, rhs)
    return rep


def boundary_factor(d: SlicedDiagram) -> QRatio:
    """``F * prod_{e not on the top} [2c_e]! / prod_v (...)!`` for an open diagram."""
    top_ids = set(d.wires[-1]) if d.wires else set()
    num = framing_factor(d)
    for e in d.edges:
        if e.id not in top_ids:
            num = num * qfact(e.color)
    return ratio_reduce(num, vertex_denominator(d.vertex_triples()))


def _half_integral(b: BracketValue) -> bool:
    return b.phase_m == 0 and b.quarter_shift_n % 2 == 0


def verify_boundary_integrality(diagrams: Iterable[SlicedDiagram]) -> IdentityReport:
    """Every entry times :func:`boundary_factor` and
    ``i^{sum of top colors} / i^{sum of bottom colors}`` must lie in
    ``Z[q^(1/2), q^(-1/2)]``.  A failing entry reports the smallest power of
    ``i`` that would repair it, if any."""
    rep = IdentityReport("boundary", None)
    for d in diagrams:
        fac = boundary_factor(d)
        # colors are doubled, so i^{j} is i^{J/2}; the total is integral
        k = (sum(d.top) - sum(d.bottom)) // 2
        for (bot, top), val in sorted(evaluate_matrix(d).items()):
            v = val * fac * _R(QLaurent.monomial(0, phase=k))
            inputs = (d.name, list(bot), list(top))
            try:
                b = canonicalize(v)
            except NotIntegral as exc:
                rep.instances.append(Instance(inputs, False, v, None, f"not integral: {exc}"))
                continue
            if _half_integral(b):
                rep.instances.append(Instance(inputs, True, v))
                continue
            fix = next((j for j in (1, 2, 3) if _half_integral(canonicalize(v * _R(QLaurent.monomial(0, phase=j))))), None)
            hint = f"fixed by i^{fix}" if fix is not None else "no power of i fixes it"
            rep.instances.append(Instance(inputs, False, v, None, f"m={b.phase_m} n={b.quarter_shift_n}; {hint}"))
    return rep


# ---------------------------------------------------------------------------
# corpus checks
# ---------------------------------------------------------------------------


def _blackboard(d: SlicedDiagram) -> bool:
    return all(e.g == 0 for e in d.edges)


def check_corpus_integrality(diagrams: Iterable[SlicedDiagram], max_color=None) -> IdentityReport:
    """Renormalized values canonicalize; blackboard-framed ones have ``m = 0``
    and ``n`` even."""
    rep = IdentityReport("integrality", max_color)
    for d in diagrams:
        v = bracket(d)
        try:
            b = canonicalize(v)
        except NotIntegral as exc:
            rep.instances.append(Instance((d.name,), False, v, None, str(exc)))
            continue
        ok = not _blackboard(d) or (b.phase_m == 0 and b.quarter_shift_n % 2 == 0)
        rep.instances.append(Instance((d.name,), ok, b, None, f"m={b.phase_m} n={b.quarter_shift_n}"))
    return rep


def check_corpus_divisibility(diagrams: Iterable[SlicedDiagram], max_color=None) -> IdentityReport:
    """The canonical body is divisible by ``[c+1]`` for every doubled edge color ``c``."""
    rep = IdentityReport("divisibility", max_color)
    for d in diagrams:
        v = bracket(d)
        try:
            b = canonicalize(v)
        except NotIntegral as exc:
            rep.instances.append(Instance((d.name,), False, v, None, str(exc)))
            continue
        res = check_divisibility(b, (e.color for e in d.edges))
        bad = [c for c, ok in res.items() if not ok]
        detail = "all edges" if not bad else "fails for " + ", ".join(f"[{c + 1}]" for c in bad)
        rep.instances.append(Instance((d.name,), not bad, b, None, detail))
    return rep


def check_engine_equivalence(diagrams: Iterable[SlicedDiagram], max_color=None) -> IdentityReport:
    """Renormalized sliced evaluation equals the shadow state-sum."""
    rep = IdentityReport("engine-equivalence", max_color)
    for d in diagrams:
        lhs = bracket(d)
        rhs = shadow_eval(sliced_to_shadow(d), framing_factor(d))
        rep.add((d.name,), lhs, rhs)
    return rep
