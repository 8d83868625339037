"""Labeled multigraph with terminal marks and the elementary minor operations."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator

REAL = "real"
VIRTUAL = "virtual"


class StructuralError(ValueError):
    """Raised when an operation is applied to a graph that violates its precondition."""


class IdSource:
    """Monotone id allocator shared by all graphs derived from one input.

    Ids are never handed out twice, so vertices and edges created by a
    pipeline run can always be traced back in reports.
    """

    def __init__(self, next_vertex: int = 1, next_edge: int = 1) -> None:
        self._vertex = itertools.count(next_vertex)
        self._edge = itertools.count(next_edge)

    def vertex(self) -> int:
        return next(self._vertex)

    def edge(self) -> int:
        return next(self._edge)

    def reserve(self, vertex: int | None = None, edge: int | None = None) -> None:
        # skip past ids that were assigned externally
        if vertex is not None:
            cur = next(self._vertex)
            self._vertex = itertools.count(max(cur, vertex + 1))
        if edge is not None:
            cur = next(self._edge)
            self._edge = itertools.count(max(cur, edge + 1))


@dataclass
class MultiGraph:
    """Undirected multigraph without self-loops.

    ``edges`` maps an edge id to its endpoint pair; ``kinds`` flags each edge
    as real or virtual.  Parallel edges are allowed.
    """

    vertices: set[int] = field(default_factory=set)
    edges: dict[int, tuple[int, int]] = field(default_factory=dict)
    kinds: dict[int, str] = field(default_factory=dict)
    terminals: set[int] = field(default_factory=set)
    ids: IdSource = field(default_factory=IdSource, repr=False, compare=False)
    _adj: dict[int, set[int]] = field(default_factory=dict, repr=False, compare=False)

    def __post_init__(self) -> None:
        self._adj = {v: set() for v in self.vertices}
        for e, (u, v) in self.edges.items():
            self._check_endpoints(e, u, v)
            self._adj[u].add(e)
            self._adj[v].add(e)
            self.kinds.setdefault(e, REAL)
        if not self.terminals <= self.vertices:
            raise StructuralError("terminal marks must reference existing vertices")
        self.ids.reserve(
            vertex=max(self.vertices, default=0), edge=max(self.edges, default=0)
        )

    def _check_endpoints(self, e: int, u: int, v: int) -> None:
        if u == v:
            raise StructuralError(f"edge {e} is a self-loop at {u}")
        if u not in self.vertices or v not in self.vertices:
            raise StructuralError(f"edge {e} has a missing endpoint")

    # construction -------------------------------------------------------

    @classmethod
    def from_edges(
        cls,
        pairs: Iterable[tuple[int, int]],
        terminals: Iterable[int] = (),
        vertices: Iterable[int] = (),
        ids: IdSource | None = None,
    ) -> "MultiGraph":
        pairs = list(pairs)
        verts = set(vertices)
        for u, v in pairs:
            verts.update((u, v))
        edges = {i + 1: (u, v) for i, (u, v) in enumerate(pairs)}
        return cls(
            vertices=verts,
            edges=edges,
            kinds={e: REAL for e in edges},
            terminals=set(terminals),
            ids=ids or IdSource(),
        )

    def copy(self) -> "MultiGraph":
        return MultiGraph(
            vertices=set(self.vertices),
            edges=dict(self.edges),
            kinds=dict(self.kinds),
            terminals=set(self.terminals),
            ids=self.ids,
        )

    def add_vertex(self, v: int | None = None, terminal: bool = False) -> int:
        if v is None:
            v = self.ids.vertex()
        elif v in self.vertices:
            raise StructuralError(f"vertex {v} already present")
        else:
            self.ids.reserve(vertex=v)
        self.vertices.add(v)
        self._adj[v] = set()
        if terminal:
            self.terminals.add(v)
        return v

    def add_edge(self, u: int, v: int, kind: str = REAL, eid: int | None = None) -> int:
        if eid is None:
            eid = self.ids.edge()
        elif eid in self.edges:
            raise StructuralError(f"edge {eid} already present")
        else:
            self.ids.reserve(edge=eid)
        self._check_endpoints(eid, u, v)
        self.edges[eid] = (u, v)
        self.kinds[eid] = kind
        self._adj[u].add(eid)
        self._adj[v].add(eid)
        return eid

    def remove_edge(self, e: int) -> None:
        u, v = self.endpoints(e)
        del self.edges[e]
        del self.kinds[e]
        self._adj[u].discard(e)
        self._adj[v].discard(e)

    def remove_vertex(self, v: int) -> None:
        for e in list(self._adj[v]):
            self.remove_edge(e)
        self.vertices.discard(v)
        self.terminals.discard(v)
        del self._adj[v]

    # queries ------------------------------------------------------------

    def endpoints(self, e: int) -> tuple[int, int]:
        try:
            return self.edges[e]
        except KeyError:
            raise StructuralError(f"unknown edge id {e}") from None

    def other(self, e: int, v: int) -> int:
        a, b = self.endpoints(e)
        return b if v == a else a

    def incident(self, v: int) -> set[int]:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def neighbors(self, v: int) -> set[int]:
        return {self.other(e, v) for e in self._adj[v]}

    def edges_between(self, u: int, v: int) -> list[int]:
        return sorted(e for e in self._adj[u] if self.other(e, u) == v)

    def is_simple(self) -> bool:
        seen = set()
        for u, v in self.edges.values():
            key = (min(u, v), max(u, v))
            if key in seen:
                return False
            seen.add(key)
        return True

    def real_edges(self) -> list[int]:
        return sorted(e for e, kind in self.kinds.items() if kind == REAL)

    def virtual_edges(self) -> list[int]:
        return sorted(e for e, kind in self.kinds.items() if kind == VIRTUAL)

    def components(self) -> list[set[int]]:
        seen: set[int] = set()
        out = []
        for s in sorted(self.vertices):
            if s in seen:
                continue
            comp = {s}
            stack = [s]
            while stack:
                x = stack.pop()
                for y in self.neighbors(x):
                    if y not in comp:
                        comp.add(y)
                        stack.append(y)
            seen |= comp
            out.append(comp)
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def subgraph(self, verts: Iterable[int]) -> "MultiGraph":
        verts = set(verts)
        g = MultiGraph(vertices=set(verts), terminals=self.terminals & verts, ids=self.ids)
        for e, (u, v) in self.edges.items():
            if u in verts and v in verts:
                g.add_edge(u, v, self.kinds[e], eid=e)
        return g

    def edge_subgraph(self, eids: Iterable[int]) -> "MultiGraph":
        eids = list(eids)
        verts = set()
        for e in eids:
            verts.update(self.endpoints(e))
        g = MultiGraph(vertices=verts, terminals=self.terminals & verts, ids=self.ids)
        for e in eids:
            u, v = self.edges[e]
            g.add_edge(u, v, self.kinds[e], eid=e)
        return g

    def edge_multiset(self) -> list[tuple[int, int]]:
        return sorted((min(u, v), max(u, v)) for u, v in self.edges.values())

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.vertices))

    def __len__(self) -> int:
        return len(self.vertices)

    def summary(self) -> dict:
        return {
            "vertices": len(self.vertices),
            "edges": len(self.edges),
            "terminals": len(self.terminals),
        }


@dataclass
class Instance:
    """A Face Cover Number instance: simple planar graph, terminals, budget."""

    graph: MultiGraph
    k: int

    @property
    def terminals(self) -> set[int]:
        return self.graph.terminals

    def validate(self) -> None:
        from .embedding import is_planar

        if self.k < 0:
            raise StructuralError("budget k must be nonnegative")
        if not self.graph.is_simple():
            raise StructuralError("input graph must be simple")
        if not is_planar(self.graph):
            raise StructuralError("input graph is not planar")


# functional mutations ----------------------------------------------------


def contract_edge(g: MultiGraph, e: int, keep: int | None = None) -> MultiGraph:
    """Contract ``e``; the surviving endpoint is the smaller id unless ``keep`` says otherwise.

    Parallel edges produced by the contraction are kept, the contracted edge
    itself (and any other edge between the two endpoints) disappears.
    """
    h = g.copy()
    contract_edge_inplace(h, e, keep)
    return h


def contract_edge_inplace(g: MultiGraph, e: int, keep: int | None = None) -> int:
    u, v = g.endpoints(e)
    if keep is None:
        keep = min(u, v)
    elif keep not in (u, v):
        raise StructuralError(f"vertex {keep} is not an endpoint of edge {e}")
    gone = v if keep == u else u
    for f in list(g.incident(gone)):
        w = g.other(f, gone)
        kind = g.kinds[f]
        g.remove_edge(f)
        if w != keep:
            g.add_edge(keep, w, kind, eid=f)
    if gone in g.terminals:
        g.terminals.add(keep)
    g.remove_vertex(gone)
    return keep


def delete_edge(g: MultiGraph, e: int) -> MultiGraph:
    h = g.copy()
    h.remove_edge(e)
    return h


def subdivide_edge(g: MultiGraph, e: int, make_terminal: bool = False) -> MultiGraph:
    h = g.copy()
    subdivide_edge_inplace(h, e, make_terminal)
    return h


def subdivide_edge_inplace(g: MultiGraph, e: int, make_terminal: bool = False) -> int:
    u, v = g.endpoints(e)
    kind = g.kinds[e]
    g.remove_edge(e)
    x = g.add_vertex(terminal=make_terminal)
    g.add_edge(u, x, kind, eid=e)
    g.add_edge(x, v, kind)
    return x
