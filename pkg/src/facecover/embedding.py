"""Rotation systems, face tracing, planarity and flips.

Everything here is combinatorial.  A rotation system stores, for every
vertex, the cyclic order of its incident edge ids; a dart ``(e, v)`` is edge
``e`` traversed away from ``v``.  Planarity of a rotation system is decided
by the Euler count of the traced faces.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import networkx as nx

from .multigraph import MultiGraph, StructuralError

Dart = tuple[int, int]


class BudgetExceeded(RuntimeError):
    """An exhaustive enumeration would exceed its configured budget."""


@dataclass
class RotationSystem:
    order: dict[int, list[int]]

    def copy(self) -> "RotationSystem":
        return RotationSystem({v: list(es) for v, es in self.order.items()})

    def mirrored(self) -> "RotationSystem":
        return RotationSystem({v: list(reversed(es)) for v, es in self.order.items()})

    def key(self) -> tuple:
        """Canonical form: each cycle rotated to start at its smallest edge id."""
        out = []
        for v in sorted(self.order):
            es = self.order[v]
            if es:
                i = es.index(min(es))
                es = es[i:] + es[:i]
            out.append((v, tuple(es)))
        return tuple(out)

    def validate(self, g: MultiGraph) -> None:
        if set(self.order) != g.vertices:
            raise StructuralError("rotation system does not cover the vertex set")
        for v in g.vertices:
            es = self.order[v]
            if len(es) != len(set(es)) or set(es) != g.incident(v):
                raise StructuralError(f"rotation at vertex {v} does not list its incident edges")


@dataclass
class Face:
    darts: list[Dart]

    @property
    def vertices(self) -> frozenset[int]:
        return frozenset(v for _, v in self.darts)

    @property
    def edges(self) -> frozenset[int]:
        return frozenset(e for e, _ in self.darts)

    def walk(self) -> list[int]:
        return [v for _, v in self.darts]


@dataclass
class FaceSet:
    faces: list[Face]
    outer: int | None = None
    _dart_face: dict[Dart, int] = field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        for i, f in enumerate(self.faces):
            for d in f.darts:
                self._dart_face[d] = i

    def __len__(self) -> int:
        return len(self.faces)

    def face_of(self, dart: Dart) -> int:
        return self._dart_face[dart]

    def faces_of_edge(self, g: MultiGraph, e: int) -> tuple[int, int]:
        u, v = g.endpoints(e)
        return self._dart_face[(e, u)], self._dart_face[(e, v)]

    def vertex_sets(self) -> list[frozenset[int]]:
        return [f.vertices for f in self.faces]

    def multiset(self) -> tuple:
        """Sorted multiset of face boundary vertex sets."""
        return tuple(sorted(tuple(sorted(f.vertices)) for f in self.faces))


def trace_faces(g: MultiGraph, rot: RotationSystem, check: bool = True) -> FaceSet:
    """Trace all face boundary walks of ``rot``.

    Arriving at ``w`` along ``e``, the walk leaves along the successor of
    ``e`` in the rotation at ``w``.  Isolated vertices get a face of their
    own so that the Euler count works per component.
    """
    if check:
        rot.validate(g)
    pos = {v: {e: i for i, e in enumerate(es)} for v, es in rot.order.items()}
    used: set[Dart] = set()
    faces = []
    darts = sorted((e, u) for e, (a, b) in g.edges.items() for u in (a, b))
    for start in darts:
        if start in used:
            continue
        walk = []
        d = start
        while d not in used:
            used.add(d)
            walk.append(d)
            e, u = d
            w = g.other(e, u)
            es = rot.order[w]
            nxt = es[(pos[w][e] + 1) % len(es)]
            d = (nxt, w)
        if d != start:
            raise StructuralError("rotation system does not define closed face walks")
        faces.append(Face(walk))
    for v in sorted(g.vertices):
        if g.degree(v) == 0:
            faces.append(Face([(-1, v)]))
    return FaceSet(faces)


def euler_ok(g: MultiGraph, fs: FaceSet) -> bool:
    """Per-component Euler check V - E + F = 2."""
    comps = g.components()
    return len(g.vertices) - len(g.edges) + len(fs) == 2 * len(comps)


def is_planar_rotation(g: MultiGraph, rot: RotationSystem) -> bool:
    return euler_ok(g, trace_faces(g, rot))


def _subdivided_nx(g: MultiGraph) -> nx.Graph:
    h = nx.Graph()
    for v in sorted(g.vertices):
        h.add_node(("v", v))
    for e in sorted(g.edges):
        u, v = g.edges[e]
        h.add_edge(("v", u), ("e", e))
        h.add_edge(("e", e), ("v", v))
    return h


def is_planar(g: MultiGraph) -> bool:
    simple = nx.Graph()
    simple.add_nodes_from(g.vertices)
    simple.add_edges_from(g.edges.values())
    return nx.check_planarity(simple)[0]


def planar_embedding(g: MultiGraph) -> RotationSystem | None:
    """A planar rotation system of ``g``, or ``None`` when ``g`` is not planar.

    Parallel edges are handled by subdividing every edge before calling the
    networkx planarity test; the rotation at an original vertex is then the
    clockwise order of its subdivision neighbours.
    """
    ok, emb = nx.check_planarity(_subdivided_nx(g))
    if not ok:
        return None
    order = {}
    for v in g.vertices:
        node = ("v", v)
        order[v] = [x[1] for x in emb.neighbors_cw_order(node)] if g.degree(v) else []
    rot = RotationSystem(order)
    if not euler_ok(g, trace_faces(g, rot)):
        # networkx reports clockwise orders; our walk convention is the mirror
        rot = rot.mirrored()
    return rot


def rotation_count(g: MultiGraph) -> int:
    return math.prod(math.factorial(max(g.degree(v) - 1, 0)) for v in g.vertices)


def enumerate_planar_rotations(g: MultiGraph, slot_budget: int = 10**6) -> Iterator[RotationSystem]:
    """Yield every planar rotation system of ``g`` exactly once.

    Each cyclic order is represented with the smallest incident edge first.
    """
    total = rotation_count(g)
    if total > slot_budget:
        raise BudgetExceeded(f"{total} rotation systems exceed budget {slot_budget}")
    verts = sorted(g.vertices)
    choices = []
    for v in verts:
        es = sorted(g.incident(v))
        if len(es) <= 2:
            choices.append([es])
        else:
            first, rest = es[0], es[1:]
            choices.append([[first, *p] for p in itertools.permutations(rest)])
    counter = _FaceCounter(g)
    target = 2 * len(g.components()) - len(g.vertices) + len(g.edges)
    for combo in itertools.product(*choices):
        order = dict(zip(verts, combo))
        if counter.count(order) == target:
            yield RotationSystem({v: list(es) for v, es in order.items()})


class _FaceCounter:
    """Counts faces of a rotation system without building Face objects."""

    def __init__(self, g: MultiGraph) -> None:
        self.g = g
        eids = sorted(g.edges)
        self.index = {e: i for i, e in enumerate(eids)}
        self.ends = [g.edges[e] for e in eids]
        self.isolated = sum(1 for v in g.vertices if g.degree(v) == 0)

    def count(self, order: dict[int, list[int]]) -> int:
        idx = self.index
        ends = self.ends
        # dart 2i: from ends[i][0]; dart 2i+1: from ends[i][1]
        nxt = [0] * (2 * len(ends))
        for w, es in order.items():
            n = len(es)
            for j, e in enumerate(es):
                i = idx[e]
                arriving = 2 * i + (1 if ends[i][0] == w else 0)
                f = es[(j + 1) % n]
                fi = idx[f]
                nxt[arriving] = 2 * fi + (0 if ends[fi][0] == w else 1)
        seen = bytearray(len(nxt))
        faces = 0
        for s in range(len(nxt)):
            if seen[s]:
                continue
            faces += 1
            d = s
            while not seen[d]:
                seen[d] = 1
                d = nxt[d]
        return faces + self.isolated


def flip_subembedding(
    g: MultiGraph,
    rot: RotationSystem,
    interior: Iterable[int],
    corners: tuple[int, int],
    edges: Iterable[int] | None = None,
) -> RotationSystem:
    """Reverse the rotation system restricted to a two-terminal subgraph.

    ``interior`` are the subgraph's non-corner vertices; ``edges`` defaults to
    all edges with at least one interior endpoint.  Interior rotations are
    reversed; at each corner only the slots of subgraph edges are reversed in
    place.
    """
    interior = set(interior)
    if edges is None:
        edges = {e for e, (u, v) in g.edges.items() if u in interior or v in interior}
    else:
        edges = set(edges)
    allowed = interior | set(corners)
    for e in edges:
        u, v = g.endpoints(e)
        if u not in allowed or v not in allowed:
            raise StructuralError(f"edge {e} leaves the flipped subgraph")
    for v in interior:
        for e in g.incident(v):
            if e not in edges:
                raise StructuralError(f"vertex {v} attaches outside the corners")
    out = rot.copy()
    for v in interior:
        out.order[v].reverse()
    for c in corners:
        es = out.order[c]
        slots = [i for i, e in enumerate(es) if e in edges]
        vals = [es[i] for i in reversed(slots)]
        for i, val in zip(slots, vals):
            es[i] = val
    return out
