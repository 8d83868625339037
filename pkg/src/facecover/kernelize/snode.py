"""S-node reductions.

The state is the corner-to-corner path with one slot per skeleton edge.
Every rule is applied through the S-node profile DP and kept only if the
node's saturated profile does not move.  Rules whose literal form would move
it are applied to the largest extent that keeps it fixed.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace

from ..classify import ComponentClass as CC
from ..decomposition import SprTree
from ..multigraph import REAL, VIRTUAL, MultiGraph
from ..oracle import FcnProfile
from ..profiles import s_path, s_profile
from .core import Context, NiceKernel, same
from .parts import C4, EDGE, KERNEL, P3, TRIANGLE, W4, splice
from .slots import Slot, find


@dataclass
class SState:
    node: int
    path: list[int]
    items: list[Slot]
    terms: set[int]  # marks on path vertices
    corner_edge: int
    corner_kind: str
    alias: dict[int, int] = field(default_factory=dict)

    @property
    def corners(self) -> tuple[int, int]:
        return self.path[0], self.path[-1]

    def copy(self, **kw) -> "SState":
        base = replace(self, path=list(self.path), items=list(self.items), terms=set(self.terms), alias=dict(self.alias))
        for key, val in kw.items():
            setattr(base, key, val)
        return base

    def size(self) -> dict:
        v, e, t = len(self.path), 1, len(self.terms)
        for s in self.items:
            a, b, c = s.size()
            v, e, t = v + a, e + b, t + c
        return {"vertices": v, "edges": e, "terminals": t}

    def profile(self, k: int) -> FcnProfile | None:
        tabs = []
        for i, s in enumerate(self.items):
            if s.real:
                tabs.append(None)
                continue
            tab = s.table(k, self.path[i], self.path[i + 1], self.terms, self.alias)
            if tab is None:
                return None
            tabs.append(tab)
        return s_profile(k, self.path, tabs, self.terms)

    def materialize(self, ids) -> MultiGraph:
        g = MultiGraph(ids=ids)
        for x in self.path:
            g.add_vertex(x, terminal=x in self.terms)
        c1, c2 = self.corners
        g.add_edge(c1, c2, self.corner_kind, eid=self.corner_edge)
        for i, s in enumerate(self.items):
            u, v = self.path[i], self.path[i + 1]
            if s.real:
                g.add_edge(u, v, REAL, eid=s.eid)
                continue
            g.add_edge(u, v, VIRTUAL, eid=s.eid)
            part, rename = s.part(u, v, ids, self.alias)
            splice(g, s.eid, part, rename)
        return g


class _Run:
    """Applies certified steps to an S state."""

    def __init__(self, state: SState, ctx: Context, ids, target: FcnProfile) -> None:
        self.state = state
        self.ctx = ctx
        self.ids = ids
        self.target = target

    def ok(self, cand: SState) -> bool:
        return same(cand.profile(self.ctx.k), self.target)

    def commit(self, rule: str, cand: SState, detail: str = "") -> None:
        before = self.state.size()
        if self.ctx.observer is not None:
            c = self.state.corners
            self.ctx.observer(
                rule, self.state.node, self.state.materialize(self.ids), cand.materialize(self.ids),
                (min(c), max(c)), self.state.corner_edge,
            )
        self.state = cand
        self.ctx.log(rule, cand.node, before, cand.size(), detail=detail)

    def reject(self, rule: str, detail: str) -> None:
        size = self.state.size()
        self.ctx.log(rule, self.state.node, size, size, status="rejected", detail=detail)

    def attempt(self, rule: str, cand: SState, detail: str = "") -> bool:
        if self.ok(cand):
            self.commit(rule, cand, detail)
            return True
        return False


def initial_state(tree: SprTree, node: int, kernels: dict[int, NiceKernel], terminals: set[int]) -> SState:
    path, edges = s_path(tree, node)
    items = [Slot(e, kernels.get(e)) for e in edges]
    for s, e in zip(items, edges):
        if s.kernel is None and tree.nodes[node].skeleton.kinds[e] == VIRTUAL:
            raise ValueError(f"missing kernel for virtual edge {e}")
    c = tree.corners(node)
    kind = REAL if tree.nodes[node].parent is None else VIRTUAL
    return SState(node, path, items, set(path) & terminals, c.edge, kind)


def kernelize_s_node(tree: SprTree, node: int, ctx: Context, kernels: dict[int, NiceKernel], cls: CC) -> NiceKernel:
    state = initial_state(tree, node, kernels, ctx.terminals)
    ids = tree.graph.ids
    target = state.profile(ctx.k)
    if target is None:
        ctx.log("S-fallback", node, state.size(), state.size(), status="skipped", detail="child profile unknown")
        return _finish(state, ids, cls, None)
    run = _Run(state, ctx, ids, target)
    _thin_terminals(run)
    _shorten_real_paths(run)
    _contract_class(run, CC.TERMINAL_FREE, keep=0, rule="S-RR5-contract-terminal-free")
    _contract_class(run, CC.UNPROBLEMATIC, keep=ctx.k + 1, rule="S-RR6-unproblematic")
    _replace_class(run, CC.UNPROBLEMATIC, (TRIANGLE, P3), "S-RR6-unproblematic")
    _contract_class(run, CC.SEMI_PROBLEMATIC, keep=ctx.k + 1, rule="S-RR7-semi-problematic")
    _replace_class(run, CC.SEMI_PROBLEMATIC, (W4, C4), "S-RR7-semi-problematic")
    _replace_class(run, CC.TERMINAL_FREE, (EDGE,), "RR1-terminal-free")
    for s in run.state.items:
        if s.cls == CC.PROBLEMATIC:
            size = run.state.size()
            ctx.log("splice-problematic", node, size, size, detail=f"edge {s.eid}")
    final = run.state
    prof = final.profile(ctx.k)
    assert same(prof, target), "S-node reduction moved the profile"
    return _finish(final, ids, cls, prof)


def _finish(state: SState, ids, cls: CC, prof: FcnProfile | None) -> NiceKernel:
    c1, c2 = state.corners
    return NiceKernel(state.node, state.materialize(ids), (min(c1, c2), max(c1, c2)), state.corner_edge, cls, prof)


def _thin_terminals(run: _Run) -> None:
    rule = "S-RR4-terminals"
    st = run.state
    inner = sorted(set(st.path[1:-1]) & st.terms)
    if len(inner) < 2:
        return
    cand = st.copy(terms=st.terms - set(inner[1:]))
    if run.attempt(rule, cand, f"kept {inner[0]}"):
        return
    # literal thinning moves f0: unmark one at a time while it is harmless
    dropped = []
    for x in inner:
        st = run.state
        if len(set(st.path[1:-1]) & st.terms) < 2:
            break
        cand = st.copy(terms=st.terms - {x})
        if run.ok(cand):
            run.commit(rule, cand, f"unmarked {x}")
            dropped.append(x)
    if len(dropped) < len(inner) - 1:
        run.reject(rule, "remaining skeleton terminals are needed for f0")


def _shorten_real_paths(run: _Run) -> None:
    rule = "S-RR4-real-path"
    st = run.state
    path, items = [st.path[0]], []
    changed = False
    i = 0
    while i < len(st.items):
        if not st.items[i].real:
            items.append(st.items[i])
            path.append(st.path[i + 1])
            i += 1
            continue
        j = i
        while j < len(st.items) and st.items[j].real:
            j += 1
        # real edges i..j-1 run from path[i] to path[j]
        keep = [x for x in st.path[i + 1 : j] if x in st.terms]
        run_items = st.items[i:j]
        if len(keep) + 1 < j - i:
            changed = True
            run_items = run_items[: len(keep) + 1]
        items.extend(run_items)
        path.extend(keep + [st.path[j]])
        i = j
    if not changed:
        return
    cand = st.copy(path=path, items=items)
    if not run.attempt(rule, cand):
        run.reject(rule, "shortening real paths moved the profile")


def _merge(st: SState, idx: int) -> SState | None:
    """Contract the slot at ``idx`` to a vertex, or ``None`` when that is not allowed."""
    if len(st.items) <= 1:
        return None
    u, v = st.path[idx], st.path[idx + 1]
    c1, c2 = st.corners
    if {u, v} == {c1, c2}:
        return None
    if (u in st.terms) != (v in st.terms):
        return None
    keep = u if u in (c1, c2) else v if v in (c1, c2) else min(u, v)
    gone = v if keep == u else u
    path = st.path[: idx + 1] + st.path[idx + 2 :]
    path[idx] = keep
    items = st.items[:idx] + st.items[idx + 1 :]
    alias = dict(st.alias)
    alias[gone] = keep
    return st.copy(path=path, items=items, terms=st.terms - {gone}, alias=alias)


def _contract_class(run: _Run, cls: CC, keep: int, rule: str) -> None:
    eids = [s.eid for s in run.state.items if s.cls == cls]
    victims = eids[keep:]
    if not victims:
        return
    # all at once first, then one by one
    cand = run.state
    for e in victims:
        idx = next(i for i, s in enumerate(cand.items) if s.eid == e)
        nxt = _merge(cand, idx)
        if nxt is None:
            cand = None
            break
        cand = nxt
    if cand is not None and run.attempt(rule, cand, f"contracted {len(victims)}"):
        return
    failed = []
    for e in victims:
        st = run.state
        idx = next(i for i, s in enumerate(st.items) if s.eid == e)
        nxt = _merge(st, idx)
        if nxt is None or not run.attempt(rule, nxt, f"contracted edge {e}"):
            failed.append(e)
    if failed:
        run.reject(rule, f"kept edges {failed}")


def _replace_class(run: _Run, cls: CC, gadgets: tuple[str, ...], rule: str) -> None:
    for e in [s.eid for s in run.state.items if s.cls == cls and s.repl == KERNEL]:
        st = run.state
        idx = next(i for i, s in enumerate(st.items) if s.eid == e)
        done = False
        for g in gadgets:
            items = list(st.items)
            items[idx] = items[idx].with_repl(g)
            if run.attempt(rule, st.copy(items=items), f"edge {e} -> {g}"):
                done = True
                break
        if not done:
            run.reject(rule, f"edge {e} kept as kernel")



