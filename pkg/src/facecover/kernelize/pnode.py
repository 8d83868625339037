"""P-node reductions on the dipole between the two poles."""

from __future__ import annotations

from dataclasses import dataclass, replace

from ..classify import ComponentClass as CC
from ..decomposition import SprTree
from ..multigraph import REAL, VIRTUAL, MultiGraph
from ..oracle import FcnProfile
from ..profiles import p_profile
from .core import Context, NiceKernel, NoInstance, profile_says_no, same
from .parts import C4, EDGE, P3, W4, splice
from .slots import Slot


@dataclass
class PState:
    node: int
    poles: tuple[int, int]
    items: list[Slot]
    terms: set[int]
    corner_edge: int
    corner_kind: str

    def copy(self, **kw) -> "PState":
        kw.setdefault("items", list(self.items))
        kw.setdefault("terms", set(self.terms))
        return replace(self, **kw)

    def size(self) -> dict:
        v, e, t = 2, 1, len(self.terms)
        for s in self.items:
            a, b, c = s.size()
            v, e, t = v + a, e + b, t + c
        return {"vertices": v, "edges": e, "terminals": t}

    def profile(self, k: int) -> FcnProfile | None:
        u, v = self.poles
        reals, tabs = 0, []
        for s in self.items:
            if s.real:
                reals += 1
                continue
            tab = s.table(k, u, v, self.terms, {})
            if tab is None:
                return None
            tabs.append(tab)
        return p_profile(k, self.poles, tabs, reals, self.terms)

    def materialize(self, ids) -> MultiGraph:
        u, v = self.poles
        g = MultiGraph(ids=ids)
        g.add_vertex(u, terminal=u in self.terms)
        g.add_vertex(v, terminal=v in self.terms)
        g.add_edge(u, v, self.corner_kind, eid=self.corner_edge)
        for s in self.items:
            if s.real:
                g.add_edge(u, v, REAL, eid=s.eid)
                continue
            g.add_edge(u, v, VIRTUAL, eid=s.eid)
            part, rename = s.part(u, v, ids, {})
            splice(g, s.eid, part, rename)
        return g


class _Run:
    def __init__(self, state: PState, ctx: Context, ids, target: FcnProfile | None) -> None:
        self.state = state
        self.ctx = ctx
        self.ids = ids
        self.target = target

    def step(self, rule: str, cand: PState, detail: str = "") -> bool:
        if self.target is None or not same(cand.profile(self.ctx.k), self.target):
            return False
        st = self.state
        if self.ctx.observer is not None:
            self.ctx.observer(rule, st.node, st.materialize(self.ids), cand.materialize(self.ids), st.poles, st.corner_edge)
        self.ctx.log(rule, st.node, st.size(), cand.size(), detail=detail)
        self.state = cand
        return True

    def reject(self, rule: str, detail: str) -> None:
        size = self.state.size()
        self.ctx.log(rule, self.state.node, size, size, status="rejected", detail=detail)

    def drop_extra(self, pick, rule: str) -> None:
        chosen = [s for s in self.state.items if pick(s)]
        if len(chosen) < 2:
            return
        gone = {s.eid for s in chosen[1:]}
        cand = self.state.copy(items=[s for s in self.state.items if s.eid not in gone])
        if not self.step(rule, cand, f"deleted {sorted(gone)}"):
            self.reject(rule, "deletion moved the profile")

    def replace(self, eid: int, options: tuple[str, ...], rule: str) -> None:
        for g in options:
            items = [x.with_repl(g) if x.eid == eid else x for x in self.state.items]
            if self.step(rule, self.state.copy(items=items), f"edge {eid} -> {g}"):
                return
        self.reject(rule, f"edge {eid} kept as kernel")


def kernelize_p_node(tree: SprTree, node: int, ctx: Context, kernels: dict[int, NiceKernel], cls: CC) -> NiceKernel:
    n = tree.nodes[node]
    c = tree.corners(node)
    items = [Slot(e, kernels.get(e)) for e in sorted(n.skeleton.edges) if e != c.edge]
    kind = REAL if n.parent is None else VIRTUAL
    state = PState(node, (c.c1, c.c2), items, {c.c1, c.c2} & ctx.terminals, c.edge, kind)
    ids = tree.graph.ids
    target = state.profile(ctx.k)
    if target is None:
        ctx.log("P-fallback", node, state.size(), state.size(), status="skipped", detail="child profile unknown")
        return NiceKernel(node, state.materialize(ids), state.poles, c.edge, cls, None)
    run = _Run(state, ctx, ids, target)
    run.drop_extra(lambda s: s.real, "P-RR8-real-edges")
    run.drop_extra(lambda s: s.cls == CC.TERMINAL_FREE, "P-RR9-terminal-free")
    # the surviving terminal-free component becomes an edge, possibly next to a real one
    for s in [s for s in run.state.items if s.cls == CC.TERMINAL_FREE]:
        run.replace(s.eid, (EDGE,), "RR1-terminal-free")
    run.drop_extra(lambda s: s.real or s.repl == EDGE, "P-RR8-real-edges")

    bearing = [s for s in run.state.items if s.cls not in (None, CC.TERMINAL_FREE)]
    problematic = [s for s in bearing if s.cls == CC.PROBLEMATIC]
    if len(problematic) > ctx.k:
        count_exit("NO-problematic-count", node, ctx, target, f"{len(problematic)} problematic children")
    if len(bearing) > 4 * ctx.k + 2:
        count_exit("NO-P-4k+2", node, ctx, target, f"{len(bearing)} terminal-bearing children")

    for s in list(run.state.items):
        if s.cls == CC.UNPROBLEMATIC:
            run.replace(s.eid, (P3,), "RR2-unproblematic")
        elif s.cls == CC.SEMI_PROBLEMATIC:
            run.replace(s.eid, (W4, C4), "RR3-semi-problematic")
        elif s.cls == CC.PROBLEMATIC:
            size = run.state.size()
            ctx.log("splice-problematic", node, size, size, detail=f"edge {s.eid}")

    st = run.state
    prof = st.profile(ctx.k)
    assert same(prof, target), "P-node reduction moved the profile"
    return NiceKernel(node, st.materialize(ids), st.poles, c.edge, cls, prof)


def count_exit(rule: str, node: int, ctx: Context, target: FcnProfile | None, detail: str) -> None:
    """Raise the NO certificate unless an exact profile says otherwise."""
    if target is None or profile_says_no(target, ctx.k):
        raise NoInstance(rule, node, detail)
    ctx.log(rule, node, {}, {}, status="unconfirmed", detail=detail + "; profile still within k")
