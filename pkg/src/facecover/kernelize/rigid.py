"""Rigidization: thicken a plane graph around chosen vertices so its embedding is forced.

Every edge at a chosen vertex u gets two copies drawn right next to it, all
three strands are subdivided next to u, and the subdivision vertices around
u are joined by a cycle in rotation order.
"""

from __future__ import annotations

import networkx as nx

from ..decomposition import S, spr_tree
from ..embedding import RotationSystem, euler_ok, trace_faces
from ..multigraph import REAL, MultiGraph, StructuralError

BRUTE_LIMIT = 12  # vertices of the suppressed graph; below this the direct search is used


def rigidize(g: MultiGraph, rot: RotationSystem, U) -> tuple[MultiGraph, RotationSystem]:
    U = set(U)
    if not U:
        return g.copy(), rot.copy()
    if not euler_ok(g, trace_faces(g, rot)):
        raise StructuralError("rigidize needs a planar rotation system")
    h = MultiGraph(ids=g.ids)
    for v in sorted(g.vertices):
        h.add_vertex(v, terminal=v in g.terminals)
    touched = {e for e, (a, b) in g.edges.items() if a in U or b in U}
    seg_at: dict[tuple[int, int, int], int] = {}  # (edge, strand, endpoint) -> segment there
    sub: dict[tuple[int, int, int], int] = {}  # (edge, strand, chosen endpoint) -> subdivision vertex
    away: dict[tuple[int, int, int], int] = {}  # the segment leaving that subdivision vertex outwards
    for e in sorted(g.edges):
        a, b = g.edges[e]
        if e not in touched:
            h.add_edge(a, b, g.kinds[e], eid=e)
            continue
        for i in range(3):
            chain = [a] + [h.add_vertex() for x in (a, b) if x in U] + [b]
            segs = [
                h.add_edge(chain[j], chain[j + 1], REAL, eid=e if i == 0 and j == 0 else None)
                for j in range(len(chain) - 1)
            ]
            seg_at[(e, i, a)], seg_at[(e, i, b)] = segs[0], segs[-1]
            if a in U:
                sub[(e, i, a)], away[(e, i, a)] = chain[1], segs[1]
            if b in U:
                sub[(e, i, b)], away[(e, i, b)] = chain[-2], segs[-2]
    order: dict[int, list[int]] = {}
    for v in g.vertices:
        out = []
        for e in rot.order[v]:
            if e not in touched:
                out.append(e)
                continue
            # parallel strands appear in opposite orders at the two ends
            strands = (0, 1, 2) if v == g.edges[e][0] else (2, 1, 0)
            out.extend(seg_at[(e, i, v)] for i in strands)
        order[v] = out
    for u in sorted(U):
        slots = []
        for e in rot.order[u]:
            strands = (0, 1, 2) if u == g.edges[e][0] else (2, 1, 0)
            slots.extend((e, i) for i in strands)
        ring = [sub[(e, i, u)] for e, i in slots]
        cyc = [h.add_edge(ring[t], ring[(t + 1) % len(ring)], REAL) for t in range(len(ring))]
        for t, (e, i) in enumerate(slots):
            order[ring[t]] = [seg_at[(e, i, u)], cyc[t - 1], away[(e, i, u)], cyc[t]]
    out = RotationSystem(order)
    if not euler_ok(h, trace_faces(h, out)):
        raise StructuralError("rigidization produced a non-planar rotation")
    return h, out


def separator_vertices(g: MultiGraph) -> set[int]:
    """Vertices lying in a separator of size at most two after suppressing degree-two vertices.

    Cut vertices come from the block structure; separation pairs of a block
    are the poles of its SPR-tree's virtual edges and the vertices of its
    long cycles.
    """
    simple = suppressed(g)
    if simple.number_of_nodes() <= BRUTE_LIMIT:
        return _separator_vertices_brute(simple)
    blocks = list(nx.biconnected_components(simple))
    cuts = set(nx.articulation_points(simple))
    out = set(cuts)
    if cuts:
        # a cut vertex c pairs with any v unless v is all that c cuts off
        # and c has nothing else to cut
        out |= set(simple.nodes)
        if len(cuts) == 1:
            (c,) = cuts
            if sum(c in b for b in blocks) == 2:
                out -= {v for v in simple.neighbors(c) if simple.degree(v) == 1}
    for block in blocks:
        if len(block) < 4:
            continue
        h = MultiGraph.from_edges(sorted(tuple(sorted(e)) for e in simple.subgraph(block).edges))
        tree = spr_tree(h)
        for node in tree.nodes.values():
            sk = node.skeleton
            if node.type == S and len(sk.vertices) >= 4:
                out |= sk.vertices
            for e in sk.virtual_edges():
                out.update(sk.endpoints(e))
    return out


def _separator_vertices_brute(simple: nx.Graph) -> set[int]:
    out = set(nx.articulation_points(simple))
    for v in list(simple.nodes):
        rest = simple.copy()
        rest.remove_node(v)
        if rest.number_of_nodes() < 3:
            continue
        cut = set(nx.articulation_points(rest))
        if cut or not nx.is_connected(rest):
            out.add(v)
            out |= cut
    return out


def suppressed(g: MultiGraph) -> nx.Graph:
    """Simple graph left after repeatedly replacing degree-two vertices by an edge."""
    multi = nx.MultiGraph()
    multi.add_nodes_from(g.vertices)
    multi.add_edges_from(g.edges.values())
    changed = True
    while changed:
        changed = False
        for v in sorted(multi.nodes):
            if multi.degree(v) != 2 or multi.number_of_nodes() <= 3:
                continue
            nbrs = [w for _, w in multi.edges(v)]
            if nbrs[0] == nbrs[1]:
                continue
            multi.remove_node(v)
            multi.add_edge(*nbrs)
            changed = True
    return nx.Graph(multi)
