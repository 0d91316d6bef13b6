"""Builders for the diagrams used in tests, checks and examples.

Every color argument is a doubled integer.
"""
from __future__ import annotations

import itertools

from . import repcore as rc
from .sliced import DiagramBuilder, SlicedDiagram


def unknot(A: int, G: int = 0) -> SlicedDiagram:
    return DiagramBuilder().cup(0, A).cap(0).build({0: G}, name=f"unknot({A};g={G})")


def unlink(components) -> SlicedDiagram:
    """Side-by-side circles; ``components`` is a list of ``(color, framing)``."""
    b = DiagramBuilder()
    for i, (A, _) in enumerate(components):
        b.cup(2 * i, A)
    for _ in components:
        b.cap(0)
    return b.build({i: g for i, (_, g) in enumerate(components)}, name="unlink")


def theta(A: int, B: int, C: int) -> SlicedDiagram:
    return DiagramBuilder().w(0, A, B, C).m(0).build(name=f"theta({A},{B},{C})")


def tet(A, B, C, D, E, F) -> SlicedDiagram:
    """Planar tetrahedron with vertex triples ``(a,b,c), (a,e,f), (d,b,f), (d,e,c)``."""
    return (
        DiagramBuilder()
        .w(0, A, B, C)
        .y(1, F, D)
        .p(0, E)
        .m(0)
        .build(name=f"tet({A},{B},{C},{D},{E},{F})")
    )


def crossed_tet(A, B, C, D, E, F, sign: int = 1) -> SlicedDiagram:
    """Tetrahedral graph drawn with one crossing between the edges ``a`` and ``d``.

    Vertex triples are ``(e,f,a), (e,c,d), (b,f,d), (b,c,a)``.  With
    ``sign = +1`` the sectors holding the edges ``c`` and ``f`` get gleam
    ``+1/2`` and those holding ``b`` and ``e`` get ``-1/2``.
    """
    return (
        DiagramBuilder()
        .w(0, E, D, C)
        .y(0, F, A)
        .cross(1, sign)
        .p(0, B)
        .m(0)
        .build(name=f"crossed_tet({A},{B},{C},{D},{E},{F};{sign:+d})")
    )


# -- pieces for connected sums ------------------------------------------------


def _theta_lower(b: DiagramBuilder, A, B, C):
    # leaves two wires of color C
    b.w(0, A, B, C).p(0, C)


def _tet_lower(b: DiagramBuilder, A, B, C, D, E, F):
    b.w(0, A, B, C).y(1, F, D).p(0, E).p(0, C)


def _theta_upper(b: DiagramBuilder, C, G, H):
    b.y(0, G, H).m(0)


def _tet_upper(b: DiagramBuilder, C, G, H, I, J, K):
    # vertex triples (c,g,h), (c,j,k), (i,g,k), (i,j,h)
    b.y(0, H, G).y(2, K, J).p(1, I).m(0)


def connected_sum(lower, upper, name="") -> SlicedDiagram:
    """``lower`` is ``('theta', (a,b,c))`` or ``('tet', (a..f))`` and is cut along
    its edge ``c``; ``upper`` is ``('theta', (c,g,h))`` or ``('tet', (c,g,h,i,j,k))``."""
    b = DiagramBuilder()
    kind, cols = lower
    {"theta": _theta_lower, "tet": _tet_lower}[kind](b, *cols)
    kind2, cols2 = upper
    if cols2[0] != cols[2]:
        raise ValueError("the summed edge must have the same color on both sides")
    {"theta": _theta_upper, "tet": _tet_upper}[kind2](b, *cols2)
    return b.build(name=name or f"{kind}{tuple(cols)}#{kind2}{tuple(cols2)}")


def twist_chain(A: int, B: int, n: int) -> SlicedDiagram:
    """Open diagram: ``|n|`` crossings of sign ``sign(n)`` on two strands."""
    b = DiagramBuilder((A, B))
    b.twist(0, n)
    return b.build(name=f"twist_chain({A},{B};{n})")


def twisted_link(N: int, a: int = 0, b: int = 0) -> SlicedDiagram:
    """Circle ``C`` around a figure-eight curve with a positive kink, both of
    color ``N``, with a box of ``a`` half twists between ``C`` and the left lobe
    and a box of ``b`` half twists between the right lobe and ``C``.
    ``a = b = 0`` is a two-component unlink whose figure-eight component has
    blackboard framing 1."""
    bl = DiagramBuilder()
    bl.cup(0, N).cup(1, N).cup(3, N)
    bl.twist(0, a)
    bl.twist(4, b)
    bl.cross(2, 1)
    bl.cap(1).cap(1).cap(0)
    return bl.build(name=f"twisted_link({N};{a},{b})")


def planar_graph(N: int) -> SlicedDiagram:
    """Two adjacent squares inside a square frame, the four outer corners of
    the pair joined to the frame corners; every edge colored ``N``.
    10 vertices, 15 edges.  ``N`` must be even for the vertices to be
    admissible."""
    b = DiagramBuilder()
    b.cup(0, N)
    b.y(0, N, N)  # bottom-left frame corner
    b.y(2, N, N)  # bottom-right frame corner
    b.y(1, N, N)  # bottom-left inner corner
    b.y(3, N, N)  # bottom-right inner corner
    b.p(2, N)  # bottom middle
    b.y(2, N, N)  # top middle
    b.p(1, N)  # top-left inner corner
    b.p(2, N)  # top-right inner corner
    b.p(0, N)  # top-left frame corner
    b.m(0)  # top-right frame corner
    return b.build(name=f"planar_graph({N})")


def theta_with_zero_chord(A: int, B: int, C: int) -> SlicedDiagram:
    """θ(a,b,c) with a 0-colored chord between its ``a`` and ``b`` edges
    (a tetrahedron with one 0-colored edge)."""
    return tet(A, B, C, B, A, 0)


# -- enumeration helpers -----------------------------------------------------


def admissible_triples(max_color: int):
    r = range(max_color + 1)
    return [t for t in itertools.product(r, r, r) if rc.is_admissible(*t)]


def tet_colorings(max_color: int):
    r = range(max_color + 1)
    out = []
    for A, B, C in admissible_triples(max_color):
        for D, E, F in itertools.product(r, r, r):
            if (
                rc.is_admissible(A, E, F)
                and rc.is_admissible(D, B, F)
                and rc.is_admissible(D, E, C)
            ):
                out.append((A, B, C, D, E, F))
    return out


def closed_corpus(max_color: int = 3, twists=(-2, -1, 0, 1, 2), twisted_colors=None):
    """Yield closed corpus diagrams with doubled colors at most ``max_color``."""
    for t in admissible_triples(max_color):
        yield theta(*t)
    for c in tet_colorings(max_color):
        yield tet(*c)
        for s in (1, -1):
            yield crossed_tet(*c, sign=s)
    for N in range(2, max_color + 1, 2):
        yield planar_graph(N)
    for t in admissible_triples(min(max_color, 2)):
        A, B, C = t
        for G, H in itertools.product(range(max_color + 1), repeat=2):
            if rc.is_admissible(C, G, H):
                yield connected_sum(("theta", t), ("theta", (C, G, H)))
    for c in tet_colorings(min(max_color, 2)):
        A, B, C, D, E, F = c
        yield connected_sum(("tet", c), ("theta", (C, C, 0)))
        yield connected_sum(("theta", (A, B, C)), ("tet", (C, A, B, F, D, E)))
    colors = twisted_colors if twisted_colors is not None else range(1, max_color + 1)
    for N in colors:
        for a, b in itertools.product(twists, repeat=2):
            yield twisted_link(N, a, b)


def crossing_corpus(max_color: int = 3):
    """Closed diagrams with at least one crossing."""
    for c in tet_colorings(max_color):
        for s in (1, -1):
            yield crossed_tet(*c, sign=s)
    for N in range(1, max_color + 1):
        for a, b in ((0, 0), (1, 0), (-1, 2), (2, -2)):
            yield twisted_link(N, a, b)


def open_corpus(max_color: int = 2):
    """Open diagrams for the boundary integrality checks."""
    r = range(max_color + 1)
    for A in r:
        yield DiagramBuilder((A,)).build(name=f"identity({A})")
        yield DiagramBuilder().cup(0, A).build(name=f"cup({A})")
        yield DiagramBuilder((A, A)).cap(0).build(name=f"cap({A})")
    for A, B, C in admissible_triples(max_color):
        yield DiagramBuilder((C,)).y(0, A, B).build(name=f"Y({A},{B},{C})")
        yield DiagramBuilder((A, B)).p(0, C).build(name=f"P({A},{B},{C})")
        yield DiagramBuilder((C,)).y(0, A, B).cross(0, 1).build(name=f"Y+cross({A},{B},{C})")
        yield DiagramBuilder((A, B)).p(0, C).y(0, A, B).build(name=f"bubble({A},{B},{C})")
    for A, B in itertools.product(r, r):
        for n in (-2, -1, 1, 2):
            yield twist_chain(A, B, n)
