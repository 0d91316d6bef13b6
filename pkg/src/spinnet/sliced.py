"""Morse-sliced diagrams of colored framed trivalent graphs and their
R-matrix / Clebsch-Gordan state-sum.

A diagram is a bottom-to-top list of slices.  Each slice is a left-to-right
row of tiles; every tile has an ordered list of bottom legs and top legs.
Colors, states and framings are doubled integers throughout.

``wires[k]`` lists the edge id of every wire crossing level ``k``, where
level ``k`` is the cross-section just below slice ``k`` (so there are
``len(slices) + 1`` levels).
"""
from __future__ import annotations

import itertools
import json
from collections import defaultdict
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Sequence

from . import repcore as rc
from .qarith import ONE, ZERO, QLaurent, QRatio, qfact, ratio_reduce

KINDS = (
    "Identity",
    "Cup",
    "Cap",
    "PosCross",
    "NegCross",
    "VertexY",
    "VertexP",
    "TripleW",
    "TripleM",
)
_ARITY = {
    "Identity": 1,
    "Cup": 1,
    "Cap": 1,
    "PosCross": 2,
    "NegCross": 2,
    "VertexY": 3,
    "VertexP": 3,
    "TripleW": 3,
    "TripleM": 3,
}
VERTEX_KINDS = frozenset({"VertexY", "VertexP", "TripleW", "TripleM"})
CROSS_KINDS = frozenset({"PosCross", "NegCross"})


class InvalidDiagram(ValueError):
    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


@dataclass(frozen=True)
class Tile:
    """One elementary piece.  Leg conventions (doubled colors):

    - ``Identity [a]``, ``Cup [a]``, ``Cap [a]``
    - ``PosCross/NegCross [a, b]``: bottom ``(a, b)``, top ``(b, a)``; the
      strand entering bottom-left leaves top-right.  It is the over-strand
      for ``PosCross`` and the under-strand for ``NegCross``.
    - ``VertexY [a, b, c]``: top ``(a, b)``, bottom ``(c)``
    - ``VertexP [a, b, c]``: bottom ``(a, b)``, top ``(c)``
    - ``TripleW [a, b, c]``: top ``(a, b, c)``; ``TripleM [a, b, c]``: bottom ``(a, b, c)``
    """

    kind: str
    colors: tuple

    def __post_init__(self):
        object.__setattr__(self, "colors", tuple(self.colors))

    @property
    def bottom(self) -> tuple:
        k, c = self.kind, self.colors
        if k == "Identity":
            return c
        if k in ("Cup", "TripleW"):
            return ()
        if k == "Cap":
            return (c[0], c[0])
        if k in CROSS_KINDS:
            return c
        if k == "VertexY":
            return (c[2],)
        if k == "VertexP":
            return (c[0], c[1])
        if k == "TripleM":
            return c
        raise KeyError(k)

    @property
    def top(self) -> tuple:
        k, c = self.kind, self.colors
        if k == "Identity":
            return c
        if k == "Cup":
            return (c[0], c[0])
        if k in ("Cap", "TripleM"):
            return ()
        if k in CROSS_KINDS:
            return (c[1], c[0])
        if k == "VertexY":
            return (c[0], c[1])
        if k == "VertexP":
            return (c[2],)
        if k == "TripleW":
            return c
        raise KeyError(k)

    def to_json(self) -> dict:
        return {"kind": self.kind, "colors": list(self.colors)}


@dataclass(frozen=True)
class Edge:
    id: int
    color: int
    euler: int
    g: int = 0


@dataclass(frozen=True)
class Violation:
    slice: int | None
    tile: int | None
    reason: str

    def __str__(self):
        where = []
        if self.slice is not None:
            where.append(f"slice {self.slice}")
        if self.tile is not None:
            where.append(f"tile {self.tile}")
        return (", ".join(where) + ": " if where else "") + self.reason


@dataclass
class SlicedDiagram:
    slices: list
    edges: list
    wires: list
    bottom: tuple = ()
    top: tuple = ()
    name: str = ""

    def __post_init__(self):
        self.slices = [tuple(s) for s in self.slices]
        self.edges = list(self.edges)
        self.wires = [tuple(w) for w in self.wires]
        self.bottom = tuple(self.bottom)
        self.top = tuple(self.top)

    @property
    def is_closed(self) -> bool:
        return not self.bottom and not self.top

    def edge_map(self) -> dict:
        return {e.id: e for e in self.edges}

    def tiles(self) -> Iterable[tuple[int, int, Tile]]:
        for k, sl in enumerate(self.slices):
            for j, t in enumerate(sl):
                yield k, j, t

    def vertex_triples(self) -> list:
        return [t.colors for _, _, t in self.tiles() if t.kind in VERTEX_KINDS]

    def max_color(self) -> int:
        return max((e.color for e in self.edges), default=0)

    # -- serialization ----------------------------------------------------

    def to_json(self) -> dict:
        out = {
            "slices": [[t.to_json() for t in sl] for sl in self.slices],
            "edges": [
                {"id": e.id, "color": e.color, "euler": e.euler, "g": e.g}
                for e in self.edges
            ],
            "wires": [list(w) for w in self.wires],
            "boundary": {"bottom": list(self.bottom), "top": list(self.top)},
        }
        if self.name:
            out["name"] = self.name
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=1)

    @classmethod
    def from_json(cls, data: dict) -> "SlicedDiagram":
        return diagram_from_json(data)


class DiagramFormatError(ValueError):
    pass


def _req(obj, key, where):
    if not isinstance(obj, dict) or key not in obj:
        raise DiagramFormatError(f"{where}: missing field '{key}'")
    return obj[key]


def _int_list(v, where):
    if not isinstance(v, list) or not all(isinstance(x, int) and not isinstance(x, bool) for x in v):
        raise DiagramFormatError(f"{where}: expected a list of integers")
    return v


def diagram_from_json(data) -> SlicedDiagram:
    if not isinstance(data, dict):
        raise DiagramFormatError("top level: expected an object")
    slices = []
    for k, sl in enumerate(_req(data, "slices", "top level")):
        if not isinstance(sl, list):
            raise DiagramFormatError(f"slices[{k}]: expected a list of tiles")
        row = []
        for j, t in enumerate(sl):
            where = f"slices[{k}][{j}]"
            kind = _req(t, "kind", where)
            if kind not in KINDS:
                raise DiagramFormatError(f"{where}: unknown tile kind {kind!r}")
            cols = _int_list(_req(t, "colors", where), where + ".colors")
            if len(cols) != _ARITY[kind]:
                raise DiagramFormatError(
                    f"{where}: {kind} takes {_ARITY[kind]} colors, got {len(cols)}"
                )
            row.append(Tile(kind, tuple(cols)))
        slices.append(row)
    edges = []
    for i, e in enumerate(_req(data, "edges", "top level")):
        where = f"edges[{i}]"
        vals = [_req(e, f, where) for f in ("id", "color", "euler")]
        g = e.get("g", 0)
        _int_list(vals + [g], where)
        edges.append(Edge(vals[0], vals[1], vals[2], g))
    wires = [
        _int_list(w, f"wires[{k}]") for k, w in enumerate(_req(data, "wires", "top level"))
    ]
    b = data.get("boundary", {}) or {}
    return SlicedDiagram(
        slices,
        edges,
        wires,
        _int_list(b.get("bottom", []), "boundary.bottom"),
        _int_list(b.get("top", []), "boundary.top"),
        data.get("name", ""),
    )


def load_diagram(path) -> SlicedDiagram:
    with open(path) as fh:
        try:
            data = json.load(fh)
        except json.JSONDecodeError as exc:
            raise DiagramFormatError(f"line {exc.lineno}: {exc.msg}") from exc
    return diagram_from_json(data)


# ---------------------------------------------------------------------------
# validation
# ---------------------------------------------------------------------------


def validate(d: SlicedDiagram) -> list:
    """Return the list of violations; an empty list means the diagram is valid."""
    out: list = []
    for k, j, t in d.tiles():
        if t.kind not in KINDS:
            out.append(Violation(k, j, f"unknown tile kind {t.kind!r}"))
            continue
        if len(t.colors) != _ARITY[t.kind]:
            out.append(Violation(k, j, f"{t.kind} needs {_ARITY[t.kind]} colors"))
            continue
        if any(c < 0 for c in t.colors):
            out.append(Violation(k, j, "negative color"))
        if t.kind in VERTEX_KINDS:
            a, b, c = t.colors
            if (a + b + c) % 2:
                out.append(Violation(k, j, f"vertex colors {t.colors} do not sum to an integer"))
            elif not rc.is_admissible(a, b, c):
                out.append(Violation(k, j, f"vertex colors {t.colors} violate the triangle inequality"))
    if out:
        return out

    # interfaces
    levels = [d.bottom]
    for k, sl in enumerate(d.slices):
        below = tuple(c for t in sl for c in t.bottom)
        if below != levels[-1]:
            out.append(
                Violation(k, None, f"bottom colors {list(below)} do not match {list(levels[-1])} below")
            )
        levels.append(tuple(c for t in sl for c in t.top))
    if levels[-1] != d.top:
        out.append(Violation(None, None, f"top colors {list(levels[-1])} differ from boundary {list(d.top)}"))
    if out:
        return out

    # edges and wires
    emap = {}
    for e in d.edges:
        if e.id in emap:
            out.append(Violation(None, None, f"duplicate edge id {e.id}"))
        emap[e.id] = e
        if e.euler not in (0, 1):
            out.append(Violation(None, None, f"edge {e.id}: euler must be 0 or 1"))
    if len(d.wires) != len(d.slices) + 1:
        out.append(Violation(None, None, f"expected {len(d.slices) + 1} wire levels, got {len(d.wires)}"))
        return out
    for k, (w, cols) in enumerate(zip(d.wires, levels)):
        if len(w) != len(cols):
            out.append(Violation(k if k < len(d.slices) else None, None, f"level {k} has {len(cols)} wires, map lists {len(w)}"))
            continue
        for p, (eid, c) in enumerate(zip(w, cols)):
            if eid not in emap:
                out.append(Violation(None, None, f"level {k} wire {p}: unknown edge {eid}"))
            elif emap[eid].color != c:
                out.append(Violation(None, None, f"level {k} wire {p}: edge {eid} has color {emap[eid].color}, wire has {c}"))
    if out:
        return out

    touches_vertex = set()
    used = {eid for row in d.wires for eid in row}
    for k, sl in enumerate(d.slices):
        lo, hi = d.wires[k], d.wires[k + 1]
        ib = it = 0
        for j, t in enumerate(sl):
            nb, nt = len(t.bottom), len(t.top)
            eb, et = lo[ib:ib + nb], hi[it:it + nt]
            bad = False
            if t.kind == "Identity":
                bad = eb[0] != et[0]
            elif t.kind == "Cup":
                bad = et[0] != et[1]
            elif t.kind == "Cap":
                bad = eb[0] != eb[1]
            elif t.kind in CROSS_KINDS:
                bad = eb[0] != et[1] or eb[1] != et[0]
            else:
                touches_vertex.update(eb)
                touches_vertex.update(et)
            if bad:
                out.append(Violation(k, j, f"{t.kind} joins wires of different edges"))
            ib += nb
            it += nt
    for e in d.edges:
        if e.id not in used:
            out.append(Violation(None, None, f"edge {e.id} is not used by any wire"))
        want = 1 if e.id in touches_vertex else 0
        if e.euler != want:
            out.append(Violation(None, None, f"edge {e.id}: euler should be {want}"))
    return out


def check_valid(d: SlicedDiagram) -> None:
    v = validate(d)
    if v:
        raise InvalidDiagram(v)


# ---------------------------------------------------------------------------
# evaluation
# ---------------------------------------------------------------------------


def framing_monomial(C: int, G: int) -> QLaurent:
    """``i^{4gc} q^{2g(c^2+c)}`` for doubled color ``C`` and doubled framing ``G``."""
    return QLaurent.monomial(G * (C * C + 2 * C), phase=G * C)


def framing_factor(d: SlicedDiagram) -> QLaurent:
    out = ONE
    for e in d.edges:
        if e.g:
            out = out * framing_monomial(e.color, e.g)
    return out


def _tile_denominator(t: Tile) -> QLaurent:
    c = t.colors
    if t.kind == "Cap":
        return qfact(c[0])
    if t.kind == "VertexY":
        return qfact(c[2])
    if t.kind == "VertexP":
        return qfact(c[0]) * qfact(c[1])
    if t.kind == "TripleM":
        return qfact(c[0]) * qfact(c[1]) * qfact(c[2])
    return ONE


@lru_cache(maxsize=None)
def _transitions(kind: str, colors: tuple, below: tuple) -> tuple:
    """Nonzero ``(top_states, numerator_weight)`` pairs for a tile whose bottom
    legs carry ``below``; weights are scaled by ``_tile_denominator``."""
    out = []
    if kind == "Cup":
        (A,) = colors
        for u in rc.states(A):
            out.append(((u, -u), rc.cup(A, u, -u)))
    elif kind == "Cap":
        (A,) = colors
        w = rc.cap_scaled(A, below[0], below[1])
        if not w.is_zero():
            out.append(((), w))
    elif kind == "PosCross":
        A, B = colors
        u, v = below
        for n in range(0, A + 1):
            h, k = v - 2 * n, u + 2 * n
            w = rc.rmat(A, B, u, v, h, k)
            if not w.is_zero():
                out.append(((h, k), w))
    elif kind == "NegCross":
        X, Y = colors
        s1, s2 = below
        for n in range(0, Y + 1):
            h, k = s2 + 2 * n, s1 - 2 * n
            w = rc.rmat_inv(X, Y, s1, s2, h, k)
            if not w.is_zero():
                out.append(((h, k), w))
    elif kind == "VertexY":
        A, B, C = colors
        (t,) = below
        for u in rc.states(A):
            w = rc.cg_scaled(A, B, C, u, t - u, t)
            if not w.is_zero():
                out.append(((u, t - u), w))
    elif kind == "VertexP":
        A, B, C = colors
        u, v = below
        w = rc.p_scaled(A, B, C, u, v, u + v)
        if not w.is_zero():
            out.append(((u + v,), w))
    elif kind == "TripleW":
        A, B, C = colors
        for u in rc.states(A):
            for v in rc.states(B):
                w = rc.w_W(A, B, C, u, v, -u - v)
                if not w.is_zero():
                    out.append(((u, v, -u - v), w))
    elif kind == "TripleM":
        A, B, C = colors
        w = rc.m_scaled(A, B, C, *below)
        if not w.is_zero():
            out.append(((), w))
    else:
        raise KeyError(kind)
    return tuple(out)


def _sweep(d: SlicedDiagram, start: dict) -> tuple[dict, QLaurent]:
    cur = start
    den = ONE
    for sl in d.slices:
        pos = 0
        for t in sl:
            nb, nt = len(t.bottom), len(t.top)
            if t.kind == "Identity":
                pos += 1
                continue
            den = den * _tile_denominator(t)
            nxt: dict = defaultdict(lambda: ZERO)
            for st, val in cur.items():
                for top, w in _transitions(t.kind, t.colors, st[pos:pos + nb]):
                    key = st[:pos] + top + st[pos + nb:]
                    nxt[key] = nxt[key] + val * w
            cur = {k: v for k, v in nxt.items() if not v.is_zero()}
            pos += nt
    return cur, den


def evaluate(d: SlicedDiagram, boundary_states=None) -> QRatio:
    """Exact state-sum of ``d``, including the framing factor.

    For a diagram with boundary pass ``boundary_states=(bottom, top)``, two
    tuples of doubled states; the result is that matrix entry.
    """
    check_valid(d)
    if d.is_closed:
        if boundary_states not in (None, ((), ())):
            raise ValueError("closed diagram takes no boundary states")
        bot, top = (), ()
    else:
        if boundary_states is None:
            raise ValueError("diagram has boundary; boundary_states required")
        bot, top = (tuple(x) for x in boundary_states)
        for cols, sts in ((d.bottom, bot), (d.top, top)):
            if len(cols) != len(sts) or not all(rc.is_state(c, s) for c, s in zip(cols, sts)):
                raise ValueError(f"boundary states {list(sts)} invalid for colors {list(cols)}")
    final, den = _sweep(d, {bot: ONE})
    num = final.get(top, ZERO)
    return ratio_reduce(num * framing_factor(d), den)


def evaluate_matrix(d: SlicedDiagram) -> dict:
    """All nonzero entries ``{(bottom_states, top_states): value}`` of an open diagram."""
    check_valid(d)
    F = framing_factor(d)
    out = {}
    for bot in itertools.product(*(rc.states(c) for c in d.bottom)):
        final, den = _sweep(d, {tuple(bot): ONE})
        for top, num in sorted(final.items()):
            out[(tuple(bot), top)] = ratio_reduce(num * F, den)
    return out


# ---------------------------------------------------------------------------
# construction helper
# ---------------------------------------------------------------------------


class DiagramBuilder:
    """Builds a diagram one elementary move at a time, padding with identities.

    Each method applies one tile at wire position ``pos`` of the current
    top level.  ``build`` traces edges through the tiles and assigns ids in
    order of first appearance.
    """

    def __init__(self, bottom: Sequence[int] = ()):
        self.bottom = tuple(bottom)
        self.colors = list(bottom)
        self.slices: list = []

    def _apply(self, pos: int, tile: Tile):
        nb = len(tile.bottom)
        if tuple(self.colors[pos:pos + nb]) != tile.bottom or pos + nb > len(self.colors):
            raise ValueError(
                f"{tile.kind}{list(tile.colors)} at {pos} does not fit wires {self.colors}"
            )
        row = [Tile("Identity", (c,)) for c in self.colors[:pos]]
        row.append(tile)
        row += [Tile("Identity", (c,)) for c in self.colors[pos + nb:]]
        self.slices.append(row)
        self.colors[pos:pos + nb] = list(tile.top)
        return self

    def _at(self, pos, n) -> tuple:
        if pos < 0 or pos + n > len(self.colors):
            raise ValueError(f"no {n} wires at position {pos} of {self.colors}")
        return tuple(self.colors[pos:pos + n])

    def cup(self, pos, a):
        return self._apply(pos, Tile("Cup", (a,)))

    def cap(self, pos):
        return self._apply(pos, Tile("Cap", self._at(pos, 1)))

    def cross(self, pos, sign=1):
        kind = "PosCross" if sign > 0 else "NegCross"
        return self._apply(pos, Tile(kind, self._at(pos, 2)))

    def twist(self, pos, n):
        """``|n|`` crossings of sign ``sign(n)`` on wires ``pos, pos+1``."""
        for _ in range(abs(n)):
            self.cross(pos, 1 if n > 0 else -1)
        return self

    def y(self, pos, a, b):
        return self._apply(pos, Tile("VertexY", (a, b) + self._at(pos, 1)))

    def p(self, pos, c):
        return self._apply(pos, Tile("VertexP", self._at(pos, 2) + (c,)))

    def w(self, pos, a, b, c):
        return self._apply(pos, Tile("TripleW", (a, b, c)))

    def m(self, pos):
        return self._apply(pos, Tile("TripleM", self._at(pos, 3)))

    def build(self, framings=None, name: str = "") -> SlicedDiagram:
        return trace_edges(self.slices, self.bottom, tuple(self.colors), framings, name)


def trace_edges(slices, bottom=(), top=(), framings=None, name="") -> SlicedDiagram:
    """Infer edges and the wire map from the tiles.

    ``framings`` maps edge index (order of first appearance, scanning levels
    bottom to top and wires left to right) to doubled framing.
    """
    slices = [tuple(s) for s in slices]
    widths = [len(bottom)] + [sum(len(t.top) for t in sl) for sl in slices]
    parent: dict = {}

    def find(x):
        while parent.setdefault(x, x) != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        rx, ry = find(x), find(y)
        if rx != ry:
            parent[max(rx, ry)] = min(rx, ry)

    for k, wdt in enumerate(widths):
        for p in range(wdt):
            find((k, p))
    vertex_segs = set()
    for k, sl in enumerate(slices):
        ib = it = 0
        for t in sl:
            nb, nt = len(t.bottom), len(t.top)
            lo = [(k, ib + i) for i in range(nb)]
            hi = [(k + 1, it + i) for i in range(nt)]
            if t.kind == "Identity":
                union(lo[0], hi[0])
            elif t.kind == "Cup":
                union(hi[0], hi[1])
            elif t.kind == "Cap":
                union(lo[0], lo[1])
            elif t.kind in CROSS_KINDS:
                union(lo[0], hi[1])
                union(lo[1], hi[0])
            else:
                vertex_segs.update(lo + hi)
            ib += nb
            it += nt
    ids: dict = {}
    wires = []
    levels = [tuple(bottom)] + [tuple(c for t in sl for c in t.top) for sl in slices]
    for k, wdt in enumerate(widths):
        row = []
        for p in range(wdt):
            r = find((k, p))
            if r not in ids:
                ids[r] = len(ids)
            row.append(ids[r])
        wires.append(row)
    color = {}
    for k, row in enumerate(wires):
        for p, eid in enumerate(row):
            color.setdefault(eid, levels[k][p])
    vert_edges = {ids[find(s)] for s in vertex_segs}
    framings = framings or {}
    edges = [
        Edge(i, color[i], 1 if i in vert_edges else 0, framings.get(i, 0))
        for i in range(len(ids))
    ]
    return SlicedDiagram(slices, edges, wires, bottom, top, name)
