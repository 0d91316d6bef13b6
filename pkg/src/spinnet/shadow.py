"""Shadow presentations and the shadow state-sum.

Region states, colors and gleams are doubled integers.  The state-sum uses
the gleam form: every vertex and every crossing contributes a plain
tetrahedral symbol, and the crossing phases are collected on the regions as
gleams.

Tetrahedron convention: ``tet_sym(a, b, c, d, e, f)`` has the four triples
``(a,b,c), (a,e,f), (d,b,f), (d,e,c)``; the opposite pairs are ``a-d``,
``b-e`` and ``c-f``.  At a vertex with colors ``(a, b, c)`` the region
opposite edge ``a`` goes in slot ``d`` and so on.  At a crossing of strands
``a`` and ``b`` with sectors left, bottom, right, top the symbol is
``tet(a, left, bottom, b, right, top)``.
"""
from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from functools import lru_cache

from . import repcore as rc
from .qarith import ONE, ZERO, QLaurent, QRatio, qint, qmultinom, ratio_reduce
from .sliced import CROSS_KINDS, VERTEX_KINDS, SlicedDiagram, check_valid, framing_monomial


# ---------------------------------------------------------------------------
# closed-form renormalized symbols
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def unknot_sym(A: int) -> QLaurent:
    """``(-1)^{2a} [2a+1]``."""
    v = qint(A + 1)
    return -v if A % 2 else v


@lru_cache(maxsize=None)
def theta_sym(A: int, B: int, C: int) -> QLaurent:
    if not rc.is_admissible(A, B, C):
        return ZERO
    s = (A + B + C) // 2
    v = qint(s + 1) * qmultinom([(A + B - C) // 2, (B + C - A) // 2, (C + A - B) // 2])
    return -v if s % 2 else v


def tet_admissible(A, B, C, D, E, F) -> bool:
    return (
        rc.is_admissible(A, B, C)
        and rc.is_admissible(A, E, F)
        and rc.is_admissible(D, B, F)
        and rc.is_admissible(D, E, C)
    )


@lru_cache(maxsize=None)
def tet_sym(A: int, B: int, C: int, D: int, E: int, F: int) -> QLaurent:
    if not tet_admissible(A, B, C, D, E, F):
        return ZERO
    T = [(A + B + C) // 2, (A + E + F) // 2, (D + B + F) // 2, (D + E + C) // 2]
    Q = [(A + B + D + E) // 2, (A + C + D + F) // 2, (B + C + E + F) // 2]
    total = ZERO
    for z in range(max(T), min(Q) + 1):
        term = qint(z + 1) * qmultinom([z - t for t in T] + [q - z for q in Q])
        total = total - term if z % 2 else total + term
    return total


def crossing_phase(B: int, C: int, E: int, F: int, sign: int = 1) -> QLaurent:
    """``i^{2(f+c-e-b)} q^{f^2+f+c^2+c-b^2-b-e^2-e}``, inverted for ``sign = -1``."""
    h = lambda X: X * X + 2 * X
    k = sign * (F + C - E - B)
    return QLaurent.monomial(sign * (h(F) + h(C) - h(B) - h(E)), phase=k)


def crossed_tet_sym(A, B, C, D, E, F, sign: int = 1) -> QLaurent:
    """Renormalized tetrahedral graph drawn with one crossing between the
    strands ``a`` and ``d``; the regions ``c, f`` sit in the sectors that
    gain ``+1/2`` gleam and ``b, e`` in the ones that lose it.  ``sign = -1``
    gives the mirror crossing."""
    t = tet_sym(E, F, A, B, C, D)
    if t.is_zero():
        return ZERO
    return crossing_phase(B, C, E, F, sign) * t


# ---------------------------------------------------------------------------
# presentations
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Region:
    id: int
    euler: int
    gleam: int = 0  # doubled


@dataclass(frozen=True)
class Face:
    color: int
    euler: int
    regions: tuple  # one or two region ids


@dataclass(frozen=True)
class ShadowVertex:
    colors: tuple  # (a, b, c)
    regions: tuple  # regions opposite a, b, c


@dataclass(frozen=True)
class ShadowCrossing:
    colors: tuple  # (a, b): a runs bottom-left to top-right
    regions: tuple  # (left, bottom, right, top)
    sign: int = 1


@dataclass
class ShadowPresentation:
    regions: list
    faces: list
    vertices: list = field(default_factory=list)
    crossings: list = field(default_factory=list)
    outer: int = 0
    name: str = ""
    framing: tuple = ()  # (color, g) of every edge with nonzero framing offset

    def framing_factor(self) -> QLaurent:
        out = ONE
        for c, g in self.framing:
            out = out * framing_monomial(c, g)
        return out

    def region_ids(self) -> list:
        return [r.id for r in self.regions]

    def validate(self) -> list:
        out = []
        ids = set(self.region_ids())
        if self.outer not in ids:
            out.append(f"outer region {self.outer} missing")
        for i, f in enumerate(self.faces):
            if not 1 <= len(f.regions) <= 2 or any(r not in ids for r in f.regions):
                out.append(f"face {i}: bad region list {f.regions}")
            if f.euler not in (0, 1):
                out.append(f"face {i}: euler must be 0 or 1")
        for i, v in enumerate(self.vertices):
            if len(v.colors) != 3 or len(v.regions) != 3 or any(r not in ids for r in v.regions):
                out.append(f"vertex {i}: needs three colors and three known regions")
        for i, c in enumerate(self.crossings):
            if len(c.colors) != 2 or len(c.regions) != 4 or any(r not in ids for r in c.regions):
                out.append(f"crossing {i}: needs two colors and four known regions")
        return out

    def to_json(self) -> dict:
        out = {
            "outer": self.outer,
            "regions": [{"id": r.id, "euler": r.euler, "gleam": r.gleam} for r in self.regions],
            "faces": [
                {"color": f.color, "euler": f.euler, "regions": list(f.regions)} for f in self.faces
            ],
            "vertices": [
                {"colors": list(v.colors), "regions": list(v.regions)} for v in self.vertices
            ],
            "crossings": [
                {"colors": list(c.colors), "regions": list(c.regions), "sign": c.sign}
                for c in self.crossings
            ],
        }
        if self.framing:
            out["framing"] = [{"color": c, "g": g} for c, g in self.framing]
        if self.name:
            out["name"] = self.name
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)


class ShadowFormatError(ValueError):
    pass


def shadow_from_json(data) -> ShadowPresentation:
    try:
        p = ShadowPresentation(
            regions=[Region(int(r["id"]), int(r["euler"]), int(r.get("gleam", 0))) for r in data["regions"]],
            faces=[Face(int(f["color"]), int(f["euler"]), tuple(f["regions"])) for f in data["faces"]],
            vertices=[ShadowVertex(tuple(v["colors"]), tuple(v["regions"])) for v in data.get("vertices", [])],
            crossings=[
                ShadowCrossing(tuple(c["colors"]), tuple(c["regions"]), int(c.get("sign", 1)))
                for c in data.get("crossings", [])
            ],
            outer=int(data.get("outer", 0)),
            name=data.get("name", ""),
            framing=tuple((int(f["color"]), int(f["g"])) for f in data.get("framing", [])),
        )
    except (KeyError, TypeError, ValueError) as exc:
        raise ShadowFormatError(f"malformed shadow presentation: {exc!r}") from exc
    bad = p.validate()
    if bad:
        raise ShadowFormatError("; ".join(bad))
    return p


def load_shadow(path) -> ShadowPresentation:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ShadowFormatError(f"line {exc.lineno}: {exc.msg}") from exc
    return shadow_from_json(data)


# ---------------------------------------------------------------------------
# state-sum
# ---------------------------------------------------------------------------


class InvalidShadowState(ValueError):
    pass


def _adjacency(p: ShadowPresentation) -> dict:
    adj: dict = {r: [] for r in p.region_ids()}
    for f in p.faces:
        r1, r2 = f.regions[0], f.regions[-1]
        adj[r1].append((r2, f.color))
        if r2 != r1:
            adj[r2].append((r1, f.color))
    return adj


def _spanning_order(p: ShadowPresentation, adj: dict) -> list:
    order, seen = [], {p.outer}
    dq = deque([p.outer])
    while dq:
        r = dq.popleft()
        for n, _ in sorted(adj[r]):
            if n not in seen:
                seen.add(n)
                order.append(n)
                dq.append(n)
    missing = set(p.region_ids()) - seen
    if missing:
        raise ValueError(f"regions {sorted(missing)} are not reachable from the outer region")
    return order


def shadow_states(p: ShadowPresentation):
    """Yield every admissible shadow state as a dict region -> doubled state."""
    adj = _adjacency(p)
    order = _spanning_order(p, adj)
    s = {p.outer: 0}

    def candidates(r):
        lo, hi, par = 0, None, None
        for n, c in adj[r]:
            if n in s:
                x = s[n]
                lo = max(lo, abs(x - c))
                hi = x + c if hi is None else min(hi, x + c)
                par = (x + c) % 2
        if hi is None:
            return range(0)
        return range(lo + ((lo - par) % 2), hi + 1, 2)

    def ok(r):
        for n, c in adj[r]:
            if n in s and not rc.is_admissible(s[n], c, s[r]):
                return False
        return True

    def rec(i):
        if i == len(order):
            yield dict(s)
            return
        r = order[i]
        for u in candidates(r):
            s[r] = u
            if ok(r):
                yield from rec(i + 1)
        s.pop(r, None)

    yield from rec(0)


def _state_terms(p: ShadowPresentation, s: dict):
    """Numerator and denominator of a single state's weight, unreduced."""
    num = ONE
    den = ONE
    for r in p.regions:
        u = s[r.id]
        if r.id == p.outer:
            continue
        if r.gleam:
            num = num * framing_monomial(u, r.gleam)
        if r.euler > 0:
            num = num * unknot_sym(u) ** r.euler
        elif r.euler < 0:
            den = den * unknot_sym(u) ** (-r.euler)
    for f in p.faces:
        if f.euler:
            u, v = s[f.regions[0]], s[f.regions[-1]]
            den = den * theta_sym(u, f.color, v)
    for vx in p.vertices:
        a, b, c = vx.colors
        u, v, t = (s[r] for r in vx.regions)
        num = num * tet_sym(a, b, c, u, v, t)
    for cx in p.crossings:
        a, b = cx.colors
        left, bottom, right, top = (s[r] for r in cx.regions)
        num = num * tet_sym(a, left, bottom, b, right, top)
    return num, den


def _check_state(p: ShadowPresentation, s: dict):
    if set(s) != set(p.region_ids()):
        raise InvalidShadowState("state must assign every region")
    if s[p.outer] != 0:
        raise InvalidShadowState("outer region must have state 0")
    for f in p.faces:
        u, v = s[f.regions[0]], s[f.regions[-1]]
        if not rc.is_admissible(u, f.color, v):
            return False
    return True


def shadow_state_weight(p: ShadowPresentation, s: dict) -> QRatio:
    """Weight of one shadow state (without the framing factor); 0 when some
    triple around an edge is not admissible."""
    if not _check_state(p, s):
        return QRatio.of(ZERO)
    num, den = _state_terms(p, s)
    if den.is_zero():
        raise InvalidShadowState("a theta or unknot factor vanishes")
    return ratio_reduce(num, den)


def shadow_eval(p: ShadowPresentation, framing_factor: QLaurent = ONE) -> QRatio:
    """``F * sum over shadow states of their weights``; 0 if there are none."""
    total = QRatio.of(ZERO)
    for s in shadow_states(p):
        num, den = _state_terms(p, s)
        if num.is_zero():
            continue
        total = total + ratio_reduce(num, den)
    return total * QRatio.of(framing_factor)


# ---------------------------------------------------------------------------
# sliced diagram -> shadow
# ---------------------------------------------------------------------------

# Gleam, in half units, that a positive crossing puts on its left and right
# sectors; top and bottom get the opposite, and a negative crossing flips both.
CROSSING_GLEAM = 1


class _UF:
    def __init__(self):
        self.p: dict = {}

    def find(self, x):
        p = self.p
        while p.setdefault(x, x) != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.p[max(ra, rb)] = min(ra, rb)


def sliced_to_shadow(d: SlicedDiagram) -> ShadowPresentation:
    """Regions, faces, vertices and crossings of a closed sliced diagram.

    Gaps between adjacent wires are merged into regions with a union-find;
    the leftmost gap is the unbounded region.  A bounded region adjacent to
    ``k`` connected components of the diagram has Euler characteristic
    ``2 - k``.
    """
    check_valid(d)
    if not d.is_closed:
        raise ValueError("sliced_to_shadow needs a closed diagram")
    emap = d.edge_map()
    gaps, segs, comps = _UF(), _UF(), _UF()
    open_segs = set()
    widths = [len(w) for w in d.wires]
    for k, w in enumerate(widths):
        for g in range(w + 1):
            gaps.find((k, g))
        for p in range(w):
            segs.find((k, p))
            comps.find((k, p))

    vertices, crossings, gleam = [], [], {}
    for k, sl in enumerate(d.slices):
        ib = it = 0
        for t in sl:
            nb, nt = len(t.bottom), len(t.top)
            left = (k, ib)
            gaps.union(left, (k + 1, it))
            lo = [(k, ib + i) for i in range(nb)]
            hi = [(k + 1, it + i) for i in range(nt)]
            legs = lo + hi
            for x in legs[1:]:
                comps.union(legs[0], x)
            if t.kind == "Identity":
                segs.union(lo[0], hi[0])
            elif t.kind == "Cup":
                segs.union(hi[0], hi[1])
            elif t.kind == "Cap":
                segs.union(lo[0], lo[1])
            else:
                open_segs.update(legs)
            right = (k, ib + nb)  # equals the next tile's left gap
            if t.kind in CROSS_KINDS:
                sgn = 1 if t.kind == "PosCross" else -1
                bottom, top = (k, ib + 1), (k + 1, it + 1)
                crossings.append((t.colors, (left, bottom, right, top), sgn))
            elif t.kind == "VertexY":
                vertices.append((t.colors, (right, left, (k + 1, it + 1))))
            elif t.kind == "VertexP":
                vertices.append((t.colors, (right, left, (k, ib + 1))))
            elif t.kind == "TripleW":
                vertices.append((t.colors, ((k + 1, it + 2), left, (k + 1, it + 1))))
            elif t.kind == "TripleM":
                vertices.append((t.colors, ((k, ib + 2), left, (k, ib + 1))))
            ib += nb
            it += nt
        gaps.union((k, ib), (k + 1, it))

    # number the regions: outer first, then by first appearance
    rid: dict = {}
    outer_root = gaps.find((0, 0))
    rid[outer_root] = 0
    for k, w in enumerate(widths):
        for g in range(w + 1):
            r = gaps.find((k, g))
            if r not in rid:
                rid[r] = len(rid)
    R = lambda gap: rid[gaps.find(gap)]

    # faces
    face_of: dict = {}
    faces = []
    touching: dict = {i: set() for i in range(len(rid))}
    for k, w in enumerate(widths):
        for p in range(w):
            root = segs.find((k, p))
            l, r = R((k, p)), R((k, p + 1))
            touching[l].add(comps.find((k, p)))
            touching[r].add(comps.find((k, p)))
            if root not in face_of:
                face_of[root] = (len(face_of), emap[d.wires[k][p]].color, (l, r))
    open_faces = {segs.find(s) for s in open_segs}
    for root, (_, color, (l, r)) in sorted(face_of.items(), key=lambda kv: kv[1][0]):
        faces.append(Face(color, 1 if root in open_faces else 0, (l, r) if l != r else (l,)))

    svs = [ShadowVertex(tuple(c), tuple(R(g) for g in rg)) for c, rg in vertices]
    scs = []
    for cols, rg, sgn in crossings:
        ids = tuple(R(g) for g in rg)
        scs.append(ShadowCrossing(tuple(cols), ids, sgn))
        h = CROSSING_GLEAM * sgn
        for r, dg in zip(ids, (h, -h, h, -h)):
            gleam[r] = gleam.get(r, 0) + dg
    regions = [
        Region(i, 1 - len(touching[i]) if i == 0 else 2 - len(touching[i]), gleam.get(i, 0))
        for i in range(len(rid))
    ]
    framing = tuple((e.color, e.g) for e in d.edges if e.g)
    return ShadowPresentation(regions, faces, svs, scs, outer=0, name=d.name, framing=framing)
