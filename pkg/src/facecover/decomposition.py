"""Block-cut trees and SPR-trees.

The SPR-tree is built by a polynomial split procedure: series chains and
parallel bundles are peeled off greedily, and whatever remains is split at
a separation pair located through the faces of a planar embedding (two
vertices separate a biconnected plane graph exactly when they share two
faces that do not merely flank a common edge).  Adjacent S/S and P/P nodes
are merged afterwards, which yields the canonical tree.
"""

from __future__ import annotations

import itertools
import math
from collections import defaultdict, deque
from dataclasses import dataclass, field
from typing import Iterator

import networkx as nx

from .embedding import (
    BudgetExceeded,
    RotationSystem,
    euler_ok,
    planar_embedding,
    trace_faces,
)
from .multigraph import REAL, VIRTUAL, MultiGraph, StructuralError

S, P, R = "S", "P", "R"


@dataclass
class BlockCutTree:
    blocks: list[frozenset[int]]
    block_edges: list[list[int]]
    cutvertices: set[int]
    tree_edges: list[tuple[int, int]]  # (block index, cut vertex)

    def blocks_at(self, v: int) -> list[int]:
        return [i for i, b in enumerate(self.blocks) if v in b]


def block_cut_tree(g: MultiGraph) -> BlockCutTree:
    if not g.is_connected():
        raise StructuralError("block-cut tree needs a connected graph")
    simple = nx.Graph()
    simple.add_nodes_from(g.vertices)
    simple.add_edges_from(g.edges.values())
    comps = sorted(
        (sorted(c) for c in nx.biconnected_component_edges(simple)),
        key=lambda es: min(min(e) for e in es),
    )
    blocks = []
    block_edges = []
    owner = {}
    for i, es in enumerate(comps):
        verts = frozenset(itertools.chain.from_iterable(es))
        blocks.append(verts)
        block_edges.append([])
        for u, v in es:
            owner[(min(u, v), max(u, v))] = i
    for e in sorted(g.edges):
        u, v = g.edges[e]
        block_edges[owner[(min(u, v), max(u, v))]].append(e)
    count = defaultdict(int)
    for b in blocks:
        for v in b:
            count[v] += 1
    cuts = {v for v, c in count.items() if c > 1}
    tree_edges = [(i, v) for i, b in enumerate(blocks) for v in sorted(b & cuts)]
    return BlockCutTree(blocks, block_edges, cuts, tree_edges)


def is_biconnected(g: MultiGraph) -> bool:
    if len(g.vertices) < 2 or not g.is_connected():
        return False
    if len(g.vertices) == 2:
        return len(g.edges) >= 1
    return len(block_cut_tree(g).blocks) == 1


def is_triconnected(g: MultiGraph) -> bool:
    """Independent brute-force check: at least 4 vertices and no separator of size <= 2."""
    n = len(g.vertices)
    if n < 4 or not g.is_connected():
        return False
    return not small_separators(g, limit=1)


def small_separators(g: MultiGraph, limit: int | None = None) -> list[frozenset[int]]:
    """All vertex sets of size 1 or 2 whose removal disconnects ``g`` (exhaustive)."""
    verts = sorted(g.vertices)
    out = []
    for size in (1, 2):
        for sep in itertools.combinations(verts, size):
            rest = set(verts) - set(sep)
            if len(rest) < 2:
                continue
            if not _connected_without(g, rest):
                out.append(frozenset(sep))
                if limit is not None and len(out) >= limit:
                    return out
    return out


def _connected_without(g: MultiGraph, rest: set[int]) -> bool:
    start = next(iter(rest))
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if y in rest and y not in seen:
                seen.add(y)
                stack.append(y)
    return len(seen) == len(rest)


# ---------------------------------------------------------------------------
# SPR-tree


@dataclass
class SprNode:
    id: int
    type: str
    skeleton: MultiGraph
    parent: int | None = None
    parent_edge: int | None = None  # virtual edge in this skeleton towards the parent
    children: dict[int, int] = field(default_factory=dict)  # virtual edge id -> child id


@dataclass
class Corners:
    c1: int
    c2: int
    edge: int


@dataclass
class SprTree:
    graph: MultiGraph
    nodes: dict[int, SprNode]
    root: int
    root_edge: int | None = None

    def children(self, node: int) -> list[int]:
        n = self.nodes[node]
        return [n.children[e] for e in sorted(n.children)]

    def postorder(self) -> list[int]:
        out = []
        stack = [(self.root, False)]
        while stack:
            x, done = stack.pop()
            if done:
                out.append(x)
                continue
            stack.append((x, True))
            for c in reversed(self.children(x)):
                stack.append((c, False))
        return out

    def subtree(self, node: int) -> list[int]:
        out = [node]
        for c in self.children(node):
            out.extend(self.subtree(c))
        return out

    def corners(self, node: int) -> Corners:
        n = self.nodes[node]
        if n.parent_edge is None:
            e = self.root_edge if self.root_edge is not None else min(n.skeleton.real_edges())
            u, v = n.skeleton.endpoints(e)
            return Corners(min(u, v), max(u, v), e)
        u, v = n.skeleton.endpoints(n.parent_edge)
        return Corners(min(u, v), max(u, v), n.parent_edge)

    def virtual_endpoints(self, node: int, e: int) -> tuple[int, int]:
        u, v = self.nodes[node].skeleton.endpoints(e)
        return (min(u, v), max(u, v))


def spr_tree(g: MultiGraph, root_edge: int | None = None) -> SprTree:
    """Canonical SPR-tree of a biconnected planar graph with >= 3 vertices.

    The root is the node holding ``root_edge`` (default: the smallest edge
    id); that edge is the root's corner edge.
    """
    if len(g.vertices) < 3 or not is_biconnected(g):
        raise StructuralError("SPR-tree needs a biconnected graph with at least 3 vertices")
    if root_edge is not None and root_edge not in g.edges:
        raise StructuralError(f"root edge {root_edge} is not in the graph")
    comps = _split_components(g)
    comps = _merge_same_type(comps)
    return _root_tree(g, comps, min(g.edges) if root_edge is None else root_edge)


def _is_cycle(h: MultiGraph) -> bool:
    return len(h.vertices) >= 3 and all(h.degree(v) == 2 for v in h.vertices) and h.is_connected()


def _cycle_like(h: MultiGraph) -> bool:
    # valid for biconnected h only
    return len(h.vertices) >= 3 and len(h.edges) == len(h.vertices)


def _split_components(g: MultiGraph) -> list[tuple[str, MultiGraph]]:
    out: list[tuple[str, MultiGraph]] = []
    start = g.copy()
    # input edges of any kind are leaves of the decomposition
    start.kinds = {e: REAL for e in start.edges}
    # each piece carries a rotation inherited from its parent; it is checked
    # and recomputed only when inheritance broke planarity
    work: list[tuple[MultiGraph, RotationSystem | None]] = [(start, None)]
    while work:
        h, rot = work.pop()
        _reduce_series_parallel(h, out, rot)
        while True:
            if len(h.vertices) == 2:
                out.append((P, h))
                break
            if _is_cycle(h):
                out.append((S, h))
                break
            rot, pairs = _candidate_pairs(h, rot)
            split = False
            for a, b in pairs:
                if a not in h.vertices or b not in h.vertices or _cycle_like(h):
                    continue
                side = _small_side(h, a, b)
                if side is None:
                    continue
                work.append(_cut_off(h, rot, a, b, side))
                _reduce_series_parallel(h, out, rot, seeds=(a, b))
                split = True
            if not split:
                out.append((R, h))
                break
    return out


def _swap(rot: RotationSystem | None, v: int, old: list[int], new: int) -> None:
    """Replace the edges ``old`` at ``v`` by ``new``, placed where the first of them was."""
    if rot is None:
        return
    gone = set(old)
    es = rot.order[v]
    i = next(i for i, e in enumerate(es) if e in gone)
    rot.order[v] = [e for e in es[:i] if e not in gone] + [new] + [e for e in es[i:] if e not in gone]


def _reduce_series_parallel(h: MultiGraph, out: list, rot: RotationSystem | None = None, seeds=None) -> None:
    """Peel parallel bundles and series chains off ``h`` in place, starting from ``seeds`` (default: everywhere)."""
    queue = deque(sorted(h.vertices) if seeds is None else [v for v in seeds if v in h.vertices])
    queued = set(queue)

    def push(v: int) -> None:
        if v in h.vertices and v not in queued:
            queue.append(v)
            queued.add(v)

    while queue:
        x = queue.popleft()
        queued.discard(x)
        if x not in h.vertices or len(h.vertices) <= 2 or _cycle_like(h):
            continue
        # parallel bundles at x
        by_nbr = defaultdict(list)
        for e in h.incident(x):
            by_nbr[h.other(e, x)].append(e)
        for y, es in sorted(by_nbr.items()):
            if len(es) >= 2 and len(h.vertices) > 2:
                bundle = h.edge_subgraph(sorted(es))
                v_id = h.ids.edge()
                bundle.add_edge(x, y, VIRTUAL, eid=v_id)
                out.append((P, bundle))
                for e in es:
                    h.remove_edge(e)
                h.add_edge(x, y, VIRTUAL, eid=v_id)
                _swap(rot, x, es, v_id)
                _swap(rot, y, es, v_id)
                push(x)
                push(y)
        if h.degree(x) != 2 or _cycle_like(h):
            continue
        # series chain through x
        chain_edges, interior = [], [x]
        ends = []
        for e in sorted(h.incident(x)):
            prev, cur, edge = x, h.other(e, x), e
            chain_edges.append(edge)
            while h.degree(cur) == 2 and cur != x:
                interior.append(cur)
                nxt = next(f for f in h.incident(cur) if f != edge)
                prev, cur, edge = cur, h.other(nxt, cur), nxt
                chain_edges.append(edge)
            ends.append((cur, edge))
        (u, eu), (v, ev) = ends
        if u == v:
            raise StructuralError("graph is not biconnected")
        cyc = h.edge_subgraph(sorted(set(chain_edges)))
        v_id = h.ids.edge()
        cyc.add_edge(u, v, VIRTUAL, eid=v_id)
        out.append((S, cyc))
        for w in interior:
            h.remove_vertex(w)
            if rot is not None:
                del rot.order[w]
        h.add_edge(u, v, VIRTUAL, eid=v_id)
        _swap(rot, u, [eu], v_id)
        _swap(rot, v, [ev], v_id)
        push(u)
        push(v)


def _candidate_pairs(h: MultiGraph, rot: RotationSystem | None) -> tuple[RotationSystem, list[tuple[int, int]]]:
    """Vertex pairs on two common faces that do not merely flank one edge."""
    fs = trace_faces(h, rot, check=False) if rot is not None else None
    if fs is None or not euler_ok(h, fs):
        rot = planar_embedding(h)
        if rot is None:
            raise StructuralError("graph is not planar")
        fs = trace_faces(h, rot, check=False)
    faces = fs.vertex_sets()
    at = defaultdict(list)
    for i, f in enumerate(faces):
        for v in f:
            at[v].append(i)
    out = []
    for a in sorted(h.vertices):
        shared = defaultdict(int)
        for i in at[a]:
            for b in faces[i]:
                if b > a:
                    shared[b] += 1
        nbrs = h.neighbors(a)
        out += [(a, b) for b, c in sorted(shared.items()) if c >= 3 or (c == 2 and b not in nbrs)]
    return rot, out


def _small_side(h: MultiGraph, a: int, b: int) -> set[int] | None:
    """A smallest-first component of ``h - {a, b}``, or None if that graph is connected.

    One search starts at every neighbour of ``a``; searches take turns
    expanding a vertex and fuse when they meet.  The first search that runs
    dry has found a whole component, after work proportional to its size.
    """
    seeds = sorted({h.other(e, a) for e in h.incident(a)} - {b})
    if len(h.vertices) <= 3 or not seeds:
        return None
    boss = list(range(len(seeds)))

    def find(i: int) -> int:
        while boss[i] != i:
            boss[i] = boss[boss[i]]
            i = boss[i]
        return i

    label = {}
    queue, members = {}, {}
    for i, x in enumerate(seeds):
        label[x] = i
        queue[i] = deque([x])
        members[i] = [x]
    live = set(range(len(seeds)))
    # every component of h - {a, b} touches a, so once all searches have
    # fused the graph is connected
    while len(live) > 1:
        for r in sorted(live):
            if r not in live:
                continue
            if not queue[r]:
                return set(members[r])
            x = queue[r].popleft()
            for e in h.incident(x):
                y = h.other(e, x)
                if y == a or y == b:
                    continue
                if y not in label:
                    label[y] = r
                    members[r].append(y)
                    queue[r].append(y)
                    continue
                s = find(label[y])
                if s == r:
                    continue
                big, small = (r, s) if len(members[r]) >= len(members[s]) else (s, r)
                boss[small] = big
                members[big] += members.pop(small)
                queue[big] += queue.pop(small)
                live.discard(small)
                r = big
    return None


def _cut_off(h: MultiGraph, rot: RotationSystem, a: int, b: int, side: set[int]) -> tuple[MultiGraph, RotationSystem]:
    """Split the piece spanned by ``side`` off ``h`` in place; both keep a virtual edge ab."""
    es = sorted({e for x in side for e in h.incident(x)})
    piece = h.edge_subgraph(es)
    v_id = h.ids.edge()
    piece.add_edge(a, b, VIRTUAL, eid=v_id)
    mine = set(es)
    sub = RotationSystem({v: list(rot.order[v]) for v in piece.vertices})
    for x in (a, b):
        away = [e for e in rot.order[x] if e not in mine]
        if away:
            _swap(sub, x, away, v_id)
        else:
            sub.order[x].append(v_id)
        _swap(rot, x, [e for e in rot.order[x] if e in mine], v_id)
    for x in side:
        h.remove_vertex(x)
        del rot.order[x]
    h.add_edge(a, b, VIRTUAL, eid=v_id)
    return piece, sub


def _merge_same_type(comps: list[tuple[str, MultiGraph]]) -> list[tuple[str, MultiGraph]]:
    comps = [(t, s) for t, s in comps]
    alive = set(range(len(comps)))
    while True:
        where = defaultdict(list)
        for i in sorted(alive):
            for e in comps[i][1].virtual_edges():
                where[e].append(i)
        merged = False
        for e in sorted(where):
            pair = where[e]
            if len(pair) != 2:
                continue
            i, j = pair
            ti, si = comps[i]
            tj, sj = comps[j]
            if ti == tj and ti in (S, P):
                new = si.copy()
                new.remove_edge(e)
                for v in sorted(sj.vertices - new.vertices):
                    new.add_vertex(v)
                for f in sorted(sj.edges):
                    if f != e:
                        x, y = sj.edges[f]
                        new.add_edge(x, y, sj.kinds[f], eid=f)
                comps[i] = (ti, new)
                alive.discard(j)
                merged = True
                break
        if not merged:
            return [comps[i] for i in sorted(alive)]


def _root_tree(g: MultiGraph, comps: list[tuple[str, MultiGraph]], root_edge: int) -> SprTree:
    # rebuild skeletons so adjacency caches match their vertex sets
    skeletons = []
    for t, s in comps:
        verts = set()
        for u, v in s.edges.values():
            verts.update((u, v))
        sk = MultiGraph(vertices=verts, ids=g.ids)
        for e in sorted(s.edges):
            u, v = s.edges[e]
            sk.add_edge(u, v, s.kinds[e], eid=e)
        sk.terminals = g.terminals & verts
        skeletons.append((t, sk))
    where = defaultdict(list)
    for i, (_, sk) in enumerate(skeletons):
        for e in sk.virtual_edges():
            where[e].append(i)
    root = next(i for i, (_, sk) in enumerate(skeletons) if root_edge in sk.edges)
    nodes = {i: SprNode(i, t, sk) for i, (t, sk) in enumerate(skeletons)}
    seen = {root}
    queue = deque([root])
    while queue:
        x = queue.popleft()
        for e in nodes[x].skeleton.virtual_edges():
            other = [j for j in where[e] if j != x]
            if len(other) != 1:
                raise StructuralError(f"virtual edge {e} is not paired")
            y = other[0]
            if y in seen:
                continue
            seen.add(y)
            nodes[x].children[e] = y
            nodes[y].parent = x
            nodes[y].parent_edge = e
            queue.append(y)
    return SprTree(g, nodes, root, root_edge)


def induced_graph(tree: SprTree, node: int) -> MultiGraph:
    """The virtual component of ``node``: its subtree glued together, parent edge dropped."""
    base = tree.graph
    out = MultiGraph(ids=base.ids)
    stack = [node]
    while stack:
        x = stack.pop()
        sk = tree.nodes[x].skeleton
        for v in sk.vertices:
            if v not in out.vertices:
                out.add_vertex(v)
        for e in sorted(sk.edges):
            if sk.kinds[e] == REAL:
                u, v = sk.edges[e]
                out.add_edge(u, v, REAL, eid=e)
        stack.extend(tree.children(x))
    out.terminals = base.terminals & out.vertices
    return out


def enhancement(tree: SprTree, node: int) -> tuple[MultiGraph, Corners]:
    g = induced_graph(tree, node)
    c = tree.corners(node)
    if c.edge not in g.edges:
        g.add_edge(c.c1, c.c2, VIRTUAL, eid=c.edge)
    return g, c


# ---------------------------------------------------------------------------
# embeddings through the tree


def _skeleton_choices(tree: SprTree) -> tuple[list[int], list[list]]:
    ids, choices = [], []
    for nid in sorted(tree.nodes):
        n = tree.nodes[nid]
        if n.type == R:
            base = planar_embedding(n.skeleton)
            choices.append([base, base.mirrored()])
        elif n.type == P:
            es = sorted(n.skeleton.edges)
            first, rest = es[0], es[1:]
            choices.append([[first, *p] for p in itertools.permutations(rest)])
        else:
            choices.append([None])
        ids.append(nid)
    return ids, choices


def spr_choice_count(tree: SprTree) -> int:
    total = 1
    for n in tree.nodes.values():
        if n.type == R:
            total *= 2
        elif n.type == P:
            total *= math.factorial(len(n.skeleton.edges) - 1)
    return total


def _skeleton_rotation(n: SprNode, choice) -> RotationSystem:
    sk = n.skeleton
    if n.type == R:
        return choice.copy()
    if n.type == P:
        a, b = sorted(sk.vertices)
        return RotationSystem({a: list(choice), b: list(reversed(choice))})
    return RotationSystem({v: sorted(sk.incident(v)) for v in sk.vertices})


def glue_rotation(tree: SprTree, node: int, picks: dict[int, object]) -> RotationSystem:
    """Rotation system of the graph induced at ``node`` (parent edge kept as a slot)."""
    n = tree.nodes[node]
    rot = _skeleton_rotation(n, picks[node])
    for e, child in sorted(n.children.items()):
        sub = glue_rotation(tree, child, picks)
        u, v = n.skeleton.endpoints(e)
        for pole in (u, v):
            seq = sub.order[pole]
            i = seq.index(e)
            after = seq[i + 1 :] + seq[:i]
            es = rot.order[pole]
            j = es.index(e)
            rot.order[pole] = es[:j] + after + es[j + 1 :]
        for w, seq in sub.order.items():
            if w not in (u, v):
                rot.order[w] = seq
    return rot


def enumerate_embeddings_spr(tree: SprTree, budget: int = 10**5) -> Iterator[RotationSystem]:
    """One rotation per choice vector: a reflection per R node, a cyclic order per P node."""
    total = spr_choice_count(tree)
    if total > budget:
        raise BudgetExceeded(f"{total} SPR choice vectors exceed budget {budget}")
    ids, choices = _skeleton_choices(tree)
    root = tree.root
    for combo in itertools.product(*choices):
        picks = dict(zip(ids, combo))
        yield glue_rotation(tree, root, picks)


def enumerate_embeddings_connected(g: MultiGraph, budget: int = 10**5) -> Iterator[RotationSystem]:
    """Embeddings of a connected graph assembled from per-block SPR embeddings.

    At every cut vertex the blocks' local cyclic sequences are inserted one
    after another, each as a contiguous run into any gap of what is already
    there, which generates every non-crossing arrangement.
    """
    if len(g.vertices) == 1:
        yield RotationSystem({v: [] for v in g.vertices})
        return
    bct = block_cut_tree(g)
    block_rots: list[list[RotationSystem]] = []
    total = 1
    for verts, es in zip(bct.blocks, bct.block_edges):
        sub = g.edge_subgraph(es)
        if len(es) == 1:
            block_rots.append([RotationSystem({v: list(es) for v in verts})])
            continue
        if len(verts) == 2:
            raise StructuralError("input graph must be simple")
        t = spr_tree(sub)
        total *= spr_choice_count(t)
        if total > budget:
            raise BudgetExceeded(f"SPR enumeration exceeds budget {budget}")
        block_rots.append(list(enumerate_embeddings_spr(t, budget)))
    cut_plans = []
    for v in sorted(bct.cutvertices):
        at = bct.blocks_at(v)
        sizes = [sum(1 for e in bct.block_edges[i] if v in g.edges[e]) for i in at]
        placed = sizes[0]
        for s in sizes[1:]:
            total *= s * placed
            placed += s
        cut_plans.append((v, at))
        if total > budget:
            raise BudgetExceeded(f"SPR enumeration exceeds budget {budget}")
    for combo in itertools.product(*block_rots):
        base: dict[int, list[int]] = {}
        for rot in combo:
            for w, seq in rot.order.items():
                if w not in bct.cutvertices:
                    base[w] = list(seq)
        merges = [_merge_at(v, [combo[i].order[v] for i in at]) for v, at in cut_plans]
        for picks in itertools.product(*merges):
            order = dict(base)
            for (v, _), seq in zip(cut_plans, picks):
                order[v] = seq
            yield RotationSystem(order)


def _merge_at(v: int, seqs: list[list[int]]) -> list[list[int]]:
    current = [list(seqs[0])]
    for s in seqs[1:]:
        nxt = []
        for cur in current:
            for gap in range(len(cur)):
                for r in range(len(s)):
                    rotated = s[r:] + s[:r]
                    nxt.append(cur[: gap + 1] + rotated + cur[gap + 1 :])
        current = nxt
    return current
