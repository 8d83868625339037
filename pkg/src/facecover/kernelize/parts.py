"""Replacement graphs for virtual components and splicing them into a host.

Every part is an enhancement: it holds the two corners and a corner edge
whose id is the virtual edge it will replace.  Splicing drops that edge and
glues the rest in, identifying corners.
"""

from __future__ import annotations

from functools import lru_cache

from ..multigraph import REAL, VIRTUAL, IdSource, MultiGraph, StructuralError
from ..oracle import FcnProfile, fcn_profile_exact

EDGE, P3, TRIANGLE, W4, C4, KERNEL = "edge", "p3", "triangle", "w4", "c4", "kernel"
GADGETS = (EDGE, P3, TRIANGLE, W4, C4)


def _base(u: int, v: int, eid: int, ids: IdSource, terminals=()) -> MultiGraph:
    g = MultiGraph(ids=ids)
    g.add_vertex(u, terminal=u in terminals)
    g.add_vertex(v, terminal=v in terminals)
    g.add_edge(u, v, VIRTUAL, eid=eid)
    return g


def build_part(kind: str, u: int, v: int, eid: int, ids: IdSource, terminals=()) -> MultiGraph:
    """A gadget enhancement between corners ``u`` and ``v`` with corner edge ``eid``.

    ``w4`` is the wheel: hub h, rim a-t1-b-t2 with t1 and t2 terminals,
    attached by u-a and v-b.  ``c4`` is the same without the hub.
    """
    g = _base(u, v, eid, ids, terminals)
    if kind == EDGE:
        g.add_edge(u, v)
    elif kind == P3:
        x = g.add_vertex(terminal=True)
        g.add_edge(u, x)
        g.add_edge(x, v)
    elif kind == TRIANGLE:
        x = g.add_vertex(terminal=True)
        g.add_edge(u, x)
        g.add_edge(x, v)
        g.add_edge(u, v)
    elif kind in (W4, C4):
        a = g.add_vertex()
        t1 = g.add_vertex(terminal=True)
        b = g.add_vertex()
        t2 = g.add_vertex(terminal=True)
        for x, y in ((a, t1), (t1, b), (b, t2), (t2, a), (u, a), (v, b)):
            g.add_edge(x, y)
        if kind == W4:
            h = g.add_vertex()
            for x in (a, t1, b, t2):
                g.add_edge(h, x)
    else:
        raise ValueError(f"unknown gadget {kind!r}")
    return g


@lru_cache(maxsize=None)
def _gadget_profile(kind: str, k: int, tu: bool, tv: bool) -> tuple:
    u, v = 1, 2
    terms = {x for x, t in ((u, tu), (v, tv)) if t}
    g = build_part(kind, u, v, 1, IdSource(3, 2), terms)
    p = fcn_profile_exact(g, (u, v), 1, k)
    key = lambda c: (u in c, v in c)  # noqa: E731
    return p.f0, p.f1, p.f2, tuple(sorted((key(c), val) for c, val in p.f0_minus.items()))


def gadget_profile(kind: str, k: int, u: int, v: int, terminals) -> FcnProfile:
    """Oracle profile of a gadget, computed once per shape and corner marks."""
    tu, tv = u in terminals, v in terminals
    f0, f1, f2, minus = _gadget_profile(kind, k, tu, tv)
    out = {}
    for (has_u, has_v), val in minus:
        out[frozenset(x for x, h in ((u, has_u), (v, has_v)) if h)] = val
    return FcnProfile(k, f0, f1, f2, out)


def relabel_profile(p: FcnProfile, mapping: dict[int, int]) -> FcnProfile:
    minus = {frozenset(mapping.get(x, x) for x in c): val for c, val in p.f0_minus.items()}
    return FcnProfile(p.k, p.f0, p.f1, p.f2, minus)


def unmark_corner(p: FcnProfile, c: int) -> FcnProfile:
    """Profile after corner ``c`` stops being a terminal.

    Both external faces hold the corners, so only the f0 values move: the
    new value for a removed set C is the old one for C plus c.
    """
    minus = {s: p.f0_minus[s | {c}] for s in p.f0_minus}
    return FcnProfile(p.k, minus[frozenset()], p.f1, p.f2, minus)


def splice(host: MultiGraph, eid: int, part: MultiGraph, rename: dict[int, int] | None = None) -> None:
    """Replace edge ``eid`` of ``host`` by ``part`` (whose corner edge is ``eid``).

    Corner marks in the host win; the part's marks only count for its own
    interior vertices.
    """
    rename = rename or {}
    if eid not in host.edges:
        raise StructuralError(f"host has no edge {eid}")
    hu, hv = host.endpoints(eid)
    pu, pv = part.endpoints(eid)
    if {rename.get(pu, pu), rename.get(pv, pv)} != {hu, hv}:
        raise StructuralError(f"corner mismatch splicing into edge {eid}")
    host.remove_edge(eid)
    corners = {pu, pv}
    for x in sorted(part.vertices - corners):
        host.add_vertex(rename.get(x, x), terminal=x in part.terminals)
    for e in sorted(part.edges):
        if e == eid:
            continue
        a, b = part.edges[e]
        host.add_edge(rename.get(a, a), rename.get(b, b), REAL, eid=e)
