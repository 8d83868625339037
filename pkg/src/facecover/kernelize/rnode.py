"""R-node reductions on the extended skeleton.

The skeleton is 3-connected, so its embedding is fixed up to reflection and
every stage below works on that one rotation system.  Children that are
terminal-free or unproblematic are folded into the skeleton first; the rest
stay as virtual slots whose endpoints count as interesting.  Each stage is
certified by the fixed-embedding profile DP and undone if the profile moves.
When the DP is over budget the stages run on trust and say so in the log.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..classify import ComponentClass as CC
from ..decomposition import SprTree
from ..embedding import BudgetExceeded, RotationSystem, planar_embedding, trace_faces
from ..multigraph import REAL, VIRTUAL, MultiGraph, StructuralError
from ..oracle import FcnProfile
from ..profiles import r_profile
from .core import Context, NiceKernel, same
from .parts import C4, W4, splice
from .pnode import count_exit
from .rigid import rigidize, separator_vertices
from .slots import Slot

SEPARATOR_LIMIT = 2000  # vertices; above this the separator search is skipped


@dataclass
class RState:
    node: int
    h: MultiGraph  # extended skeleton with the corner edge
    rot: RotationSystem
    slots: dict[int, Slot]
    corners: tuple[int, int]
    corner_edge: int

    def copy(self) -> "RState":
        order = {v: list(es) for v, es in self.rot.order.items()}
        return RState(self.node, self.h.copy(), RotationSystem(order), dict(self.slots), self.corners, self.corner_edge)

    @property
    def terms(self) -> set[int]:
        return self.h.terminals

    def interesting(self) -> set[int]:
        out = set(self.terms) | set(self.corners)
        for e in self.slots:
            out.update(self.h.endpoints(e))
        return out

    def profile(self, k: int, budget: int) -> FcnProfile | None:
        kids = {}
        for e, s in self.slots.items():
            u, v = self.h.endpoints(e)
            tab = s.table(k, u, v, self.terms, {})
            if tab is None:
                return None
            kids[e] = tab
        try:
            return r_profile(k, self.h, self.corner_edge, kids, self.terms, rot=self.rot, budget=budget)
        except BudgetExceeded:
            return None

    def size(self) -> dict:
        v, e, t = len(self.h.vertices), len(self.h.edges), len(self.terms)
        for s in self.slots.values():
            a, b, c = s.size()
            v, e, t = v + a, e + b - 1, t + c
        return {"vertices": v, "edges": e, "terminals": t}

    def materialize(self, ids, h: MultiGraph | None = None) -> MultiGraph:
        g = (h or self.h).copy()
        for e in sorted(self.slots):
            u, v = g.endpoints(e)
            part, rename = self.slots[e].part(u, v, ids, {})
            splice(g, e, part, rename)
        return g

    # rotation-aware edits

    def drop_edge(self, e: int) -> None:
        for x in set(self.h.endpoints(e)):
            self.rot.order[x].remove(e)
        self.h.remove_edge(e)

    def drop_vertex(self, v: int) -> None:
        for e in list(self.h.incident(v)):
            self.drop_edge(e)
        del self.rot.order[v]
        self.h.remove_vertex(v)

    def subdivide(self, e: int, terminal: bool) -> int:
        u, v = self.h.endpoints(e)
        kind = self.h.kinds[e]
        self.h.remove_edge(e)
        x = self.h.add_vertex(terminal=terminal)
        self.h.add_edge(u, x, kind, eid=e)
        f = self.h.add_edge(x, v, kind)
        rv = self.rot.order[v]
        rv[rv.index(e)] = f
        self.rot.order[x] = [e, f]
        return x


class _Run:
    def __init__(self, state: RState, ctx: Context, ids, target: FcnProfile | None) -> None:
        self.state = state
        self.ctx = ctx
        self.ids = ids
        self.target = target

    def certify(self, rule: str, cand: RState, detail: str = "") -> bool:
        st = self.state
        if _loosened(st, cand):
            size = st.size()
            self.ctx.log(rule, st.node, size, size, status="rejected",
                         detail="an interesting vertex would join a small separator; stage undone")
            return False
        if self.target is not None:
            if not same(cand.profile(self.ctx.k, self.ctx.budget), self.target):
                size = st.size()
                self.ctx.log(rule, st.node, size, size, status="rejected", detail="profile moved; stage undone")
                return False
            status = "applied"
        else:
            status = "uncertified"
        if self.ctx.observer is not None:
            self.ctx.observer(rule, st.node, _rigid_view(st, self.ids), _rigid_view(cand, self.ids), st.corners, st.corner_edge)
        self.ctx.log(rule, st.node, st.size(), cand.size(), status=status, detail=detail)
        self.state = cand
        return True


def _loosened(before: RState, after: RState) -> bool:
    """True when ``after`` lets the embedding flex around an interesting vertex that ``before`` held still."""
    if len(after.h.vertices) > SEPARATOR_LIMIT:
        return False
    inter = after.interesting()
    new = separator_vertices(after.h) & inter
    return bool(new - separator_vertices(before.h))


def _rigid_view(st: RState, ids) -> MultiGraph:
    """The state's graph with its embedding pinned down, for outside comparison."""
    h, _ = _rigidized(st)
    return st.materialize(ids, h)


def _rigidized(st: RState) -> tuple[MultiGraph, set[int]]:
    if len(st.h.vertices) > SEPARATOR_LIMIT:
        return st.h, set()
    U = separator_vertices(st.h) - st.interesting()
    if not U:
        return st.h, U
    h, _ = rigidize(st.h, st.rot, U)
    return h, U


def initial_state(tree: SprTree, node: int, kernels: dict[int, NiceKernel], terminals: set[int]) -> RState:
    n = tree.nodes[node]
    c = tree.corners(node)
    h = n.skeleton.copy()
    h.terminals = h.vertices & terminals
    if n.parent is not None:
        h.kinds[c.edge] = VIRTUAL
    rot = planar_embedding(h)
    if rot is None:
        raise StructuralError(f"R skeleton of node {node} is not planar")
    slots = {}
    for e in sorted(h.edges):
        if e == c.edge or h.kinds[e] != VIRTUAL:
            continue
        if e not in kernels:
            raise ValueError(f"missing kernel for virtual edge {e}")
        slots[e] = Slot(e, kernels[e])
    return RState(node, h, rot, slots, (c.c1, c.c2), c.edge)


def kernelize_r_node(tree: SprTree, node: int, ctx: Context, kernels: dict[int, NiceKernel], cls: CC) -> NiceKernel:
    state = initial_state(tree, node, kernels, ctx.terminals)
    ids = tree.graph.ids
    k = ctx.k
    target = state.profile(k, ctx.budget)
    if target is None:
        size = state.size()
        ctx.log("R-profile", node, size, size, status="skipped", detail="profile search over budget; rules run uncertified")
    run = _Run(state, ctx, ids, target)

    problematic = [e for e, s in state.slots.items() if s.cls == CC.PROBLEMATIC]
    if len(problematic) > k:
        count_exit("NO-problematic-count", node, ctx, target, f"{len(problematic)} problematic children")
    semi = [e for e, s in state.slots.items() if s.cls == CC.SEMI_PROBLEMATIC]
    if len(semi) > k * k:
        count_exit("NO-semi-count", node, ctx, target, f"{len(semi)} semi-problematic virtual edges")

    _fold_children(run)
    _terminal_heavy_faces(run)
    h = run.state.h
    if len(h.vertices) >= 7 and len(h.terminals) > 3 * k * k + k:
        count_exit("NO-terminal-count", node, ctx, target, f"{len(h.terminals)} terminals on the extended skeleton")

    before_trim = run.state
    _stage(run, "R-boring-edge-removal", _boring_edge_removal)
    _stage(run, "R-private-face-merging", _private_face_merging)
    _stage(run, "R-boring-edge-contraction", _boring_edge_contraction)

    for e, s in sorted(run.state.slots.items()):
        if s.cls == CC.SEMI_PROBLEMATIC:
            _replace(run, e, (W4, C4), "RR3-semi-problematic")
        elif s.cls == CC.PROBLEMATIC:
            size = run.state.size()
            ctx.log("splice-problematic", node, size, size, detail=f"edge {e}")

    st = run.state
    prof = st.profile(k, ctx.budget) if target is not None else None
    if target is not None:
        assert same(prof, target), "R-node reduction moved the profile"
    graph = _finish(run, before_trim)
    c1, c2 = st.corners
    return NiceKernel(node, graph, (c1, c2), st.corner_edge, cls, prof)


def _finish(run: _Run, before_trim: RState) -> MultiGraph:
    st = run.state
    ctx = run.ctx
    if len(st.h.vertices) > SEPARATOR_LIMIT:
        size = st.size()
        ctx.log("rigidize", st.node, size, size, status="skipped", detail="graph too large for the separator search")
        return st.materialize(run.ids)
    U = separator_vertices(st.h)
    if U & st.interesting():
        # an interesting vertex sits in a small separator: fall back to the untrimmed skeleton
        size = st.size()
        ctx.log("rigidize", st.node, size, before_trim.size(), status="rejected",
                detail="interesting vertex in a small separator; trimming undone")
        slots = st.slots
        st = before_trim.copy()
        st.slots = dict(slots)  # keep the gadget choices made since
        run.state = st
        U = separator_vertices(st.h) - st.interesting()
    if not U:
        return st.materialize(run.ids)
    h, rot = rigidize(st.h, st.rot, U)
    after = st.materialize(run.ids, h)
    if ctx.observer is not None:
        # compare against the untrimmed extended skeleton, whose embedding is still unique
        ref = before_trim.copy()
        ref.slots = dict(st.slots)
        ctx.observer("rigidize", st.node, ref.materialize(run.ids), after, st.corners, st.corner_edge)
    size = st.size()
    grown = dict(size, vertices=size["vertices"] + len(h.vertices) - len(st.h.vertices),
                 edges=size["edges"] + len(h.edges) - len(st.h.edges))
    ctx.log("rigidize", st.node, size, grown, detail=f"around {sorted(U)}")
    return after


def _fold_children(run: _Run) -> None:
    """Terminal-free children become real edges, unproblematic ones terminal-subdivided edges."""
    for rule, cls in (("RR1-terminal-free", CC.TERMINAL_FREE), ("RR2-unproblematic", CC.UNPROBLEMATIC)):
        eids = sorted(e for e, s in run.state.slots.items() if s.cls == cls)
        if not eids:
            continue
        cand = run.state.copy()
        for e in eids:
            del cand.slots[e]
            cand.h.kinds[e] = REAL
            if cls == CC.UNPROBLEMATIC:
                cand.subdivide(e, terminal=True)
        if not run.certify(rule, cand, f"edges {eids}"):
            # one at a time, so a single stubborn child does not block the rest
            for e in eids:
                one = run.state.copy()
                del one.slots[e]
                one.h.kinds[e] = REAL
                if cls == CC.UNPROBLEMATIC:
                    one.subdivide(e, terminal=True)
                run.certify(rule, one, f"edge {e}")


def _terminal_heavy_faces(run: _Run) -> None:
    st = run.state
    k = run.ctx.k
    if len(st.h.vertices) < 7:
        return
    cand = st.copy()
    cap = 3 * k + 1
    faces = trace_faces(cand.h, cand.rot, check=False).vertex_sets()
    unmarked = []
    for f in faces:
        on = sorted(f & cand.terms)
        if len(on) <= cap:
            continue
        keep = [c for c in cand.corners if c in on]
        keep += [x for x in on if x not in keep][: cap - len(keep)]
        for x in on:
            if x not in keep:
                cand.h.terminals.discard(x)
                unmarked.append(x)
    if unmarked:
        run.certify("R-terminal-heavy-face", cand, f"unmarked {sorted(unmarked)}")


def _stage(run: _Run, rule: str, step) -> None:
    cand = run.state.copy()
    detail = step(cand)
    if detail:
        run.certify(rule, cand, detail)


def _boring_edge_removal(st: RState) -> str:
    """Delete real edges between two faces without interesting vertices.

    Deleting an edge whose sides are different faces merges them and keeps
    the graph connected, and a merged dull face stays dull, so one pass in
    edge order with a union-find over faces reaches the fixpoint.  Edges
    left with the same dull face on both sides are bridges; the parts they
    hang off without interesting vertices are pruned leaf by leaf.
    """
    inter = st.interesting()
    fs = trace_faces(st.h, st.rot, check=False)
    dull = [not (f & inter) for f in fs.vertex_sets()]
    root = list(range(len(dull)))

    def find(i: int) -> int:
        while root[i] != i:
            root[i] = root[root[i]]
            i = root[i]
        return i

    removed = 0
    for e in sorted(st.h.edges):
        if st.h.kinds[e] != REAL or e == st.corner_edge:
            continue
        i, j = fs.faces_of_edge(st.h, e)
        if not (dull[i] and dull[j]):
            continue
        i, j = find(i), find(j)
        if i != j:
            root[i] = j
            st.drop_edge(e)
            removed += 1
    removed += _prune_leaves(st, inter)
    return f"removed {removed} edges" if removed else ""


def _private_face_merging(st: RState) -> str:
    """Merge faces whose only interesting vertex is the same vertex x.

    Two such faces sharing a real edge become one by deleting that edge; the
    merged face is again private to x, so one pass with a union-find over
    faces suffices.  Dead leaves left behind are pruned.
    """
    inter = st.interesting()
    fs = trace_faces(st.h, st.rot, check=False)
    owner = []
    for f in fs.vertex_sets():
        own = f & inter
        owner.append(next(iter(own)) if len(own) == 1 else None)
    root = list(range(len(owner)))

    def find(i: int) -> int:
        while root[i] != i:
            root[i] = root[root[i]]
            i = root[i]
        return i

    merged = 0
    for e in sorted(st.h.edges):
        if st.h.kinds[e] != REAL or e == st.corner_edge:
            continue
        i, j = fs.faces_of_edge(st.h, e)
        if owner[i] is None or owner[i] != owner[j]:
            continue
        i, j = find(i), find(j)
        if i != j:
            root[i] = j
            st.drop_edge(e)
            merged += 1
    _prune_leaves(st, inter)
    return f"merged {merged} face pairs" if merged else ""


def _prune_leaves(st: RState, inter: set[int]) -> int:
    """Delete uninteresting vertices of degree at most one, repeatedly."""
    gone = 0
    leaves = [v for v in sorted(st.h.vertices) if st.h.degree(v) <= 1 and v not in inter]
    while leaves:
        x = leaves.pop()
        if x not in st.h.vertices or st.h.degree(x) > 1:
            continue
        if any(st.h.kinds[e] != REAL for e in st.h.incident(x)):
            continue
        nbrs = [st.h.other(e, x) for e in st.h.incident(x)]
        st.drop_vertex(x)
        gone += 1
        leaves += [w for w in nbrs if w not in inter]
    return gone


def _boring_edge_contraction(st: RState) -> str:
    inter = st.interesting()
    work = sorted(st.h.vertices - inter)
    gone = 0
    while work:
        x = work.pop()
        if x not in st.h.vertices or x in inter:
            continue
        deg = st.h.degree(x)
        if deg == 0:
            st.drop_vertex(x)
            gone += 1
        elif deg == 1:
            (e,) = st.h.incident(x)
            w = st.h.other(e, x)
            st.drop_vertex(x)
            work.append(w)
            gone += 1
        elif deg == 2:
            e1, e2 = sorted(st.h.incident(x))
            a, b = st.h.other(e1, x), st.h.other(e2, x)
            if a == b or st.h.kinds[e1] != REAL or st.h.kinds[e2] != REAL:
                continue
            rb = st.rot.order[b]
            rb[rb.index(e2)] = e1
            del st.rot.order[x]
            st.h.remove_vertex(x)
            st.h.add_edge(a, b, REAL, eid=e1)
            work.extend((a, b))
            gone += 1
    return f"removed {gone} vertices" if gone else ""


def _replace(run: _Run, e: int, options: tuple[str, ...], rule: str) -> None:
    for g in options:
        cand = run.state.copy()
        cand.slots[e] = cand.slots[e].with_repl(g)
        if run.target is None or same(cand.profile(run.ctx.k, run.ctx.budget), run.target):
            run.certify(rule, cand, f"edge {e} -> {g}")
            return
    size = run.state.size()
    run.ctx.log(rule, run.state.node, size, size, status="rejected", detail=f"edge {e} kept as kernel")
