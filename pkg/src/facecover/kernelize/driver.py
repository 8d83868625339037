"""Whole-instance kernelization: components, blocks and the SPR dynamic program.

Components and blocks only interact through how many faces they can share.
Two pieces glued at a terminal (or drawn next to each other) share exactly
one face, so a graph whose pieces need f_1, ..., f_m faces needs
1 + sum(f_i - 1) faces, minus nothing and plus one for every place where
the gluing vertex cannot be shared for free.  The driver cuts every block
out, kernelizes it with its attachment vertex as a corner, and writes the
plus-ones back as copies of K4 with all vertices terminal (each costs
exactly one extra face).
"""

from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field

from ..classify import Classifier
from ..decomposition import P, S, block_cut_tree, spr_tree
from ..multigraph import REAL, Instance, MultiGraph
from .core import Context, NiceKernel, NoInstance, Observer, RuleFiring, size_of
from .pnode import kernelize_p_node
from .rnode import kernelize_r_node
from .snode import kernelize_s_node

YES, NO, UNKNOWN = "yes", "no", "unknown"


@dataclass
class Report:
    rules_fired: list[RuleFiring] = field(default_factory=list)
    profile: dict = field(default_factory=dict)
    kernel_size: dict = field(default_factory=dict)
    decision_hint: str = UNKNOWN
    vertex_map: dict[int, int] = field(default_factory=dict)  # input id -> kernel id

    def to_json(self) -> dict:
        return {
            "rules_fired": [r.to_json() for r in self.rules_fired],
            "profile": self.profile,
            "kernel_size": self.kernel_size,
            "decision_hint": self.decision_hint,
            "vertex_map": {str(a): b for a, b in sorted(self.vertex_map.items())},
        }


def canonical_no() -> Instance:
    """K4 with every vertex a terminal: two faces are needed, one is allowed."""
    g = MultiGraph.from_edges([(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)], terminals={1, 2, 3, 4})
    return Instance(g, 1)


def canonical_yes() -> Instance:
    return Instance(MultiGraph.from_edges([(1, 2)], terminals={1}), 1)


def kernelize_block(block: MultiGraph, k: int, terms: set[int], ctx: Context, root_edge: int | None = None) -> NiceKernel:
    """Run the SPR dynamic program on a biconnected block with at least three vertices."""
    tree = spr_tree(block, root_edge)
    cls = Classifier(tree, terms)
    kernels: dict[int, NiceKernel] = {}
    out = None
    for node in tree.postorder():
        n = tree.nodes[node]
        mine = {e: kernels[e] for e in n.children}
        kind = cls.classify(node)
        if n.type == S:
            kern = kernelize_s_node(tree, node, ctx, mine, kind)
        elif n.type == P:
            kern = kernelize_p_node(tree, node, ctx, mine, kind)
        else:
            kern = kernelize_r_node(tree, node, ctx, mine, kind)
        if n.parent is None:
            out = kern
        else:
            kernels[n.parent_edge] = kern
    return out


@dataclass
class _Part:
    graph: MultiGraph | None  # None: a bridge or single vertex, never emitted
    fcn: float | None  # None when unknown
    pv: int | None = None
    a: float = 0.0  # faces needed with the attachment vertex free
    b: float = 0.0  # faces needed with it a terminal


class _Component:
    """Block-by-block bookkeeping for one connected component."""

    def __init__(self, g: MultiGraph, k: int, ctx: Context) -> None:
        self.g = g
        self.k = k
        self.ctx = ctx
        self.terms = set(g.terminals)
        self.parts: list[_Part] = []
        self.splits = 0

    def run(self) -> None:
        g = self.g
        if len(g.vertices) == 1:
            self.parts.append(_Part(None, 1 if self.terms else 0))
            return
        bct = block_cut_tree(g)
        at = defaultdict(list)
        for i, b in enumerate(bct.blocks):
            for v in b & bct.cutvertices:
                at[v].append(i)
        # root the block-cut tree at block 0
        parent_cut: dict[int, int | None] = {0: None}
        order = [0]
        kids: dict[int, dict[int, list[int]]] = defaultdict(lambda: defaultdict(list))
        for i in order:
            for v in sorted(bct.blocks[i] & bct.cutvertices):
                if v == parent_cut[i]:
                    continue
                for j in at[v]:
                    if j not in parent_cut:
                        parent_cut[j] = v
                        kids[i][v].append(j)
                        order.append(j)
        status = set(self.terms)
        sub: dict[int, tuple[float, float]] = {}  # subtree fcn without / with the parent cut vertex
        pieces: dict[int, tuple] = {}
        for i in reversed(order):
            pv = parent_cut[i]
            # decide every cut vertex below this block first
            extra_a = 0.0
            for v, js in sorted(kids[i].items()):
                free = any(sub[j][1] == sub[j][0] and sub[j][0] >= 1 for j in js)
                split = v in self.terms or free
                if split:
                    status.add(v)
                    extra_a += sum(sub[j][1] for j in js) - len(js)
                    self.splits += len(js)
                else:
                    extra_a += sum(sub[j][0] for j in js)
            a, b, piece = self._block(i, bct, pv, status)
            pieces[i] = piece
            sub[i] = (a + extra_a, b + extra_a)
        for i in order:
            p = pieces[i]
            if p.pv is not None:
                p.fcn = p.b if p.pv in status else p.a
            if p.graph is not None:
                # cut vertices decided as non-terminal stay off in their blocks
                p.graph.terminals -= (p.graph.vertices & bct.cutvertices) - status
            self.parts.append(p)

    def _block(self, i: int, bct, pv: int | None, status: set[int]) -> tuple[float, float, _Part]:
        g = self.g
        verts = bct.blocks[i]
        block = g.edge_subgraph(bct.block_edges[i])
        terms = verts & status
        if pv is not None:
            terms = terms | {pv}
        if len(verts) == 2:
            if pv is None:
                f = 1.0 if terms else 0.0
                return f, f, _Part(None, f)
            (w,) = verts - {pv}
            a = 1.0 if w in terms else 0.0
            return a, 1.0, _Part(None, None, pv, a, 1.0)
        root = None
        if pv is not None:
            root = min(block.incident(pv))
        block.terminals = set(terms)
        ctx = Context(self.k, set(terms), self.ctx.budget, self.ctx.observer, self.ctx.firings)
        kern = kernelize_block(block, self.k, terms, ctx, root)
        p = kern.profile
        if p is None:
            raise _Unknown()
        b = min(p.f0, p.f1, p.f2)
        if pv is None:
            return b, b, _Part(kern.graph, b)
        a = min(p.f0_minus[frozenset({pv})], p.f1, p.f2)
        return a, b, _Part(kern.graph, None, pv, a, b)


class _Unknown(Exception):
    pass


def kernelize(
    inst: Instance,
    budget: int = 200_000,
    observer: Observer | None = None,
) -> tuple[Instance, Report]:
    """Kernelize an instance; the result has the same answer and k' <= k."""
    inst.validate()
    g, k = inst.graph, inst.k
    report = Report()
    if k == 0 or not g.terminals:
        return _trivial(inst, report)
    parts: list[_Part] = []
    n_comp = 0
    splits = 0
    try:
        for comp in g.components():
            cg = g.subgraph(comp)
            c = _Component(cg, k, Context(k, set(cg.terminals), budget, observer, report.rules_fired))
            try:
                c.run()
            except _Unknown:
                report.rules_fired.append(RuleFiring("raw-component", None, size_of(cg), size_of(cg), "skipped",
                                                     "profile over budget; component kept as is"))
                c.parts = [_Part(cg, None)]
                c.splits = 0
            live = [p for p in c.parts if p.fcn is None or p.fcn >= 1]
            if live:
                n_comp += 1
            parts.extend(live)
            splits += c.splits
    except NoInstance as exc:
        report.rules_fired.append(RuleFiring(exc.rule, exc.node, size_of(g), size_of(canonical_no().graph), detail=exc.detail))
        return _emit(canonical_no(), report, NO)
    plus = len(parts) - n_comp - splits
    known = [p.fcn for p in parts if p.fcn is not None]
    total = 1 + plus + sum(f - 1 for f in known)
    report.profile = {"parts": [("unknown" if p.fcn is None else ("above" if p.fcn > k else int(p.fcn))) for p in parts],
                      "shared_savings": splits, "extra_faces": plus}
    if total > k:
        report.rules_fired.append(RuleFiring("NO-component-count", None, size_of(g), size_of(canonical_no().graph),
                                             detail=f"at least {int(min(total, k + 1))} faces needed"))
        return _emit(canonical_no(), report, NO)
    keep = [p for p in parts if p.graph is not None and (p.fcn is None or p.fcn >= 2)]
    hint = YES if len(known) == len(parts) else UNKNOWN
    if not keep and plus == 0:
        return _emit(canonical_yes(), report, hint)
    out = MultiGraph(ids=g.ids)
    for p in keep:
        for v in sorted(p.graph.vertices):
            out.add_vertex(v, terminal=v in p.graph.terminals)
        for e in sorted(p.graph.edges):
            out.add_edge(*p.graph.edges[e], REAL)
    for _ in range(plus):
        q = [out.add_vertex(terminal=True) for _ in range(4)]
        for x in range(4):
            for y in range(x + 1, 4):
                out.add_edge(q[x], q[y], REAL)
    return _emit(Instance(out, k), report, hint, g)


def _trivial(inst: Instance, report: Report) -> tuple[Instance, Report]:
    g = inst.graph
    if not g.terminals:
        out = MultiGraph.from_edges([], vertices=[1])
        return _emit(Instance(out, 0), report, YES)
    report.rules_fired.append(RuleFiring("NO-zero-budget", None, size_of(g), size_of(canonical_no().graph),
                                         detail="terminals present but k = 0"))
    return _emit(canonical_no(), report, NO)


def _emit(kern: Instance, report: Report, hint: str, original: MultiGraph | None = None) -> tuple[Instance, Report]:
    """Drop parallel edges, relabel to 1..n and fill in the report.

    ``original`` is given when kernel vertices still carry input ids.
    """
    g = kern.graph
    ids = {v: i + 1 for i, v in enumerate(sorted(g.vertices))}
    pairs = sorted({(min(ids[u], ids[v]), max(ids[u], ids[v])) for u, v in g.edges.values()})
    simple = MultiGraph.from_edges(pairs, terminals={ids[v] for v in g.terminals}, vertices=ids.values())
    if original is not None:
        report.vertex_map = {v: ids[v] for v in sorted(original.vertices) if v in ids}
    report.kernel_size = size_of(simple)
    report.decision_hint = hint
    return Instance(simple, kern.k), report
