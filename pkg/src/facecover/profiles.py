"""Profile propagation through S, P and R nodes.

A child enters its parent only through its profile: using ``p`` of its two
external sides costs ``f_p - p`` further faces, and using none costs an
internal cover of its non-corner terminals plus whichever corners the parent
still needs covered.  The three combiners below turn child profiles into the
profile of the parent's enhancement.  All values are saturated at ``k + 1``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .decomposition import P, R, S, SprTree
from .embedding import BudgetExceeded, RotationSystem, planar_embedding, trace_faces
from .multigraph import MultiGraph
from .oracle import INF, FcnProfile, corner_subsets, saturate


@dataclass(frozen=True)
class ChildTable:
    """A child's profile seen from its parent's skeleton."""

    corners: tuple[int, int]
    terminal_corners: frozenset
    profile: FcnProfile

    def ext_cost(self, p: int) -> float:
        return self.profile.f1 - 1 if p == 1 else self.profile.f2 - 2

    def int_cost(self, cover: frozenset = frozenset()) -> float:
        """Internal faces covering the non-corner terminals and the corners in ``cover``."""
        if not cover <= self.terminal_corners:
            raise ValueError("only terminal corners can be requested")
        return self.profile.f0_minus[frozenset(self.terminal_corners - cover)]

    def cost(self, p: int, cover: frozenset = frozenset()) -> float:
        return self.int_cost(cover) if p == 0 else self.ext_cost(p)


def table(profile: FcnProfile, corners: tuple[int, int], terminals) -> ChildTable:
    a, b = corners
    return ChildTable((min(a, b), max(a, b)), frozenset({a, b} & set(terminals)), profile)


def trivial_profile(k: int, corners: tuple[int, int]) -> FcnProfile:
    """Profile of an enhancement with no terminals at all."""
    return FcnProfile(k, 0, 1, 2, {c: 0 for c in corner_subsets(*corners)})


def _assemble(k, corners, f1, f2, f0_of) -> FcnProfile:
    minus = {c: saturate(f0_of(c), k) for c in corner_subsets(*corners)}
    return FcnProfile(k, minus[frozenset()], saturate(f1, k), saturate(f2, k), minus)


# ---------------------------------------------------------------------------
# S nodes


def s_profile(
    k: int,
    path: list[int],
    items: list[ChildTable | None],
    terminals,
) -> FcnProfile:
    """Profile of a cycle ``path[0] .. path[-1]`` closed by the corner edge.

    ``items[i]`` sits between ``path[i]`` and ``path[i+1]``; ``None`` is a
    real edge.
    """
    terminals = set(terminals)
    corners = (path[0], path[-1])
    kids = [x for x in items if x is not None]
    f2 = sum(x.ext_cost(2) for x in kids) + 2
    f1 = sum(x.ext_cost(1) for x in kids) + 1
    inner = set(path[1:-1]) & terminals

    def f0(removed: frozenset) -> float:
        need = inner | ((set(corners) & terminals) - removed)
        # state: cost so far, keyed by whether path[i] still waits for a cover
        states = {path[0] in need: 0}
        for i, x in enumerate(items):
            u, v = path[i], path[i + 1]
            nxt: dict[bool, float] = {}
            for pending, cost in states.items():
                opts = []
                if x is None:
                    if not pending:
                        opts.append((v in need, cost))
                else:
                    base = {u} if pending else set()
                    for take_v in ((False, True) if v in need else (False,)):
                        cover = frozenset(base | ({v} if take_v else set()))
                        opts.append((v in need and not take_v, cost + x.int_cost(cover)))
                for key, c in opts:
                    if c < nxt.get(key, INF):
                        nxt[key] = c
            states = nxt
        return states.get(False, INF)

    return _assemble(k, corners, f1, f2, f0)


# ---------------------------------------------------------------------------
# P nodes


def p_profile(
    k: int,
    poles: tuple[int, int],
    kids: list[ChildTable],
    real_edges: int,
    terminals,
) -> FcnProfile:
    """Profile of a dipole: corner edge, ``real_edges`` real edges and ``kids``.

    Around the poles the items form a cycle whose gaps are the faces.  A
    choice of gaps gives every item a count p in {0,1,2}; counts are
    realisable iff the number of ones is even and, without ones, all counts
    agree.
    """
    terminals = set(terminals)
    tc = set(poles) & terminals

    def best(j: int) -> float:
        # doubled cost: 2 * faces + p per item, so that gaps are counted once
        states = {(0, False, False, False): 0}
        for x in kids:
            nxt = {}
            for (par, a0, a1, a2), c in states.items():
                for p in (0, 1, 2):
                    cost = x.cost(p)
                    if cost == INF:
                        continue
                    key = ((par + (p == 1)) % 2, a0 or p == 0, a1 or p == 1, a2 or p == 2)
                    val = c + 2 * cost + p
                    if val < nxt.get(key, INF):
                        nxt[key] = val
            states = nxt
        out = INF
        for (par, a0, a1, a2), c in states.items():
            for w1 in range(real_edges + 1):
                for w2 in range(real_edges - w1 + 1):
                    w0 = real_edges - w1 - w2
                    ones = par + w1 + (j == 1)
                    has0 = a0 or w0 > 0 or j == 0
                    has1 = a1 or w1 > 0 or j == 1
                    has2 = a2 or w2 > 0 or j == 2
                    if ones % 2:
                        continue
                    if not has1 and has0:
                        continue  # all zero is the no-gap case, all two is fine
                    val = c + w1 + 2 * w2 + j
                    out = min(out, val / 2)
        return out

    def no_gap(need: set[int]) -> float:
        if not kids:
            return INF if need else 0
        base = [x.int_cost() for x in kids]
        total = sum(base)
        if not need:
            return total
        out = INF
        for owners in itertools.product(range(len(kids)), repeat=len(need)):
            cover = {}
            for v, i in zip(sorted(need), owners):
                cover.setdefault(i, set()).add(v)
            val = total + sum(kids[i].int_cost(frozenset(vs)) - base[i] for i, vs in cover.items())
            out = min(out, val)
        return out

    f1, f2 = best(1), best(2)
    with_gap = best(0)
    return _assemble(k, poles, f1, f2, lambda c: min(with_gap, no_gap(tc - c)))


# ---------------------------------------------------------------------------
# R nodes


@dataclass
class _RFaces:
    vertices: list[frozenset]
    external: tuple[int, int]
    sides: dict[int, tuple[int, int]]  # virtual edge -> its two faces


def _r_faces(skeleton: MultiGraph, corner_edge: int, rot: RotationSystem | None = None) -> _RFaces:
    rot = rot or planar_embedding(skeleton)
    fs = trace_faces(skeleton, rot, check=False)
    sides = {e: fs.faces_of_edge(skeleton, e) for e in skeleton.edges}
    return _RFaces(fs.vertex_sets(), sides[corner_edge], sides)


def r_profile(
    k: int,
    skeleton: MultiGraph,
    corner_edge: int,
    kids: dict[int, ChildTable],
    terminals,
    rot: RotationSystem | None = None,
    budget: int = 200_000,
) -> FcnProfile:
    """Profile of a fixed-embedding skeleton whose virtual edges carry children.

    Raises ``BudgetExceeded`` when the face-subset search would exceed
    ``budget`` candidate sets.
    """
    terminals = set(terminals)
    faces = _r_faces(skeleton, corner_edge, rot)
    c1, c2 = sorted(skeleton.endpoints(corner_edge))
    corners = (c1, c2)
    fa, fb = faces.external
    inner_terms = (skeleton.vertices & terminals) - set(corners)
    bearing = {e for e, x in kids.items() if x.int_cost() != 0 or x.ext_cost(1) != 0 or x.ext_cost(2) != 0}
    cap = k + 1

    def solve(j: int, need: set[int]) -> float:
        relevant = set()
        for i, f in enumerate(faces.vertices):
            if f & need:
                relevant.add(i)
        for e in bearing:
            relevant.update(faces.sides[e])
        free = sorted(relevant - {fa, fb})
        forced = [()] if j == 0 else ([(fa,), (fb,)] if j == 1 else [(fa, fb)])
        if fa == fb and j == 2:
            return INF
        best = INF
        work = 0
        for ext in forced:
            for size in range(0, len(free) + 1):
                if size + j >= min(best, cap):
                    break
                for extra in itertools.combinations(free, size):
                    work += 1
                    if work > budget:
                        raise BudgetExceeded("R-node profile search exceeds budget")
                    chosen = set(ext) | set(extra)
                    val = len(chosen) + _residual(chosen, need)
                    if val < best:
                        best = val
        return best

    # every child starts out internal; choosing a face next to it swaps in its external cost
    int0 = {e: x.int_cost() for e, x in kids.items()}
    base = sum(v for v in int0.values() if v != INF)
    stuck = sum(1 for v in int0.values() if v == INF)  # children that cannot stay internal
    face_kids: dict[int, list[int]] = {}
    at_vertex: dict[int, list[int]] = {}
    for e in kids:
        for f in set(faces.sides[e]):
            face_kids.setdefault(f, []).append(e)
        for v in set(skeleton.endpoints(e)):
            at_vertex.setdefault(v, []).append(e)

    def _residual(chosen: set[int], need: set[int]) -> float:
        cost = base
        touched = set()
        for f in chosen:
            touched.update(face_kids.get(f, ()))
        left = stuck
        for e in touched:
            p = sum(1 for f in set(faces.sides[e]) if f in chosen)
            if int0[e] == INF:
                left -= 1
                cost += kids[e].ext_cost(p)
            else:
                cost += kids[e].ext_cost(p) - int0[e]
        if left:
            return INF
        covered = set()
        for f in chosen:
            covered |= faces.vertices[f]
        uncovered = sorted(need - covered)
        if not uncovered:
            return cost
        # each uncovered vertex needs an incident child that covers it internally
        options = []
        for v in uncovered:
            opts = [e for e in at_vertex.get(v, ()) if e not in touched]
            if not opts:
                return INF
            options.append(opts)
        extra = INF
        for pick in itertools.product(*options):
            cover: dict[int, set[int]] = {}
            for v, e in zip(uncovered, pick):
                cover.setdefault(e, set()).add(v)
            val = sum(kids[e].int_cost(frozenset(vs)) - int0[e] for e, vs in cover.items())
            extra = min(extra, val)
        return cost + extra

    tc = set(corners) & terminals
    f1 = solve(1, set(inner_terms))
    f2 = solve(2, set(inner_terms))
    return _assemble(k, corners, f1, f2, lambda c: solve(0, inner_terms | (tc - c)))


# ---------------------------------------------------------------------------
# whole trees


def s_path(tree: SprTree, node: int) -> tuple[list[int], list[int]]:
    """Vertices and edges of an S skeleton from c1 to c2, avoiding the corner edge."""
    n = tree.nodes[node]
    c = tree.corners(node)
    sk = n.skeleton
    path, edges = [c.c1], []
    prev_edge = c.edge
    while path[-1] != c.c2 or not edges:
        v = path[-1]
        e = next(f for f in sorted(sk.incident(v)) if f != prev_edge)
        edges.append(e)
        path.append(sk.other(e, v))
        prev_edge = e
    return path, edges


def tree_profiles(tree: SprTree, k: int, terminals=None, budget: int = 200_000) -> dict[int, FcnProfile]:
    """Exact saturated profiles of every node's enhancement, bottom-up."""
    terms = set(tree.graph.terminals if terminals is None else terminals)
    out: dict[int, FcnProfile] = {}
    for node in tree.postorder():
        n = tree.nodes[node]
        tabs = {}
        for e, child in n.children.items():
            tabs[e] = table(out[child], tree.virtual_endpoints(node, e), terms)
        c = tree.corners(node)
        if n.type == S:
            path, edges = s_path(tree, node)
            out[node] = s_profile(k, path, [tabs.get(e) for e in edges], terms)
        elif n.type == P:
            reals = sum(1 for e in n.skeleton.edges if e not in tabs and e != c.edge)
            out[node] = p_profile(k, (c.c1, c.c2), [tabs[e] for e in sorted(tabs)], reals, terms)
        else:
            out[node] = r_profile(k, n.skeleton, c.edge, tabs, terms, budget=budget)
    return out


def fcn_from_root(profile: FcnProfile) -> float:
    """Face cover number of a block whose root corner edge is a real edge."""
    return min(profile.f0, profile.f1, profile.f2)
