"""The four basic replacements of a virtual component inside a whole graph."""

from __future__ import annotations

from dataclasses import dataclass

from ..classify import Classifier, ComponentClass
from ..decomposition import SprTree, induced_graph
from ..multigraph import MultiGraph, StructuralError
from .core import NiceKernel
from .parts import C4, EDGE, P3, W4, build_part, splice


@dataclass
class ComponentRef:
    """The virtual component below ``node`` of an SPR-tree of the graph being edited."""

    tree: SprTree
    node: int

    @property
    def corners(self) -> tuple[int, int]:
        c = self.tree.corners(self.node)
        return c.c1, c.c2

    def graph(self) -> MultiGraph:
        return induced_graph(self.tree, self.node)


def _cut_out(g: MultiGraph, comp: ComponentRef) -> tuple[MultiGraph, int]:
    """Remove the component's edges and inner vertices; return the graph and a placeholder edge."""
    inner = comp.graph()
    u, v = comp.corners
    out = g.copy()
    for e in inner.edges:
        out.remove_edge(e)
    for x in inner.vertices - {u, v}:
        out.remove_vertex(x)
    return out, out.add_edge(u, v)


def _guard(g: MultiGraph, comp: ComponentRef, want: ComponentClass) -> None:
    got = Classifier(comp.tree, g.terminals).classify(comp.node)
    if got != want:
        raise StructuralError(f"component at node {comp.node} is {got.value}, not {want.value}")


def _gadget(g: MultiGraph, comp: ComponentRef, kind: str) -> MultiGraph:
    out, slot = _cut_out(g, comp)
    u, v = comp.corners
    splice(out, slot, build_part(kind, u, v, slot, out.ids))
    return out


def replace_terminal_free(g: MultiGraph, comp: ComponentRef) -> MultiGraph:
    _guard(g, comp, ComponentClass.TERMINAL_FREE)
    return _gadget(g, comp, EDGE)


def replace_unproblematic(g: MultiGraph, comp: ComponentRef) -> MultiGraph:
    _guard(g, comp, ComponentClass.UNPROBLEMATIC)
    return _gadget(g, comp, P3)


def replace_semi_problematic(g: MultiGraph, comp: ComponentRef, gadget: str = W4) -> MultiGraph:
    if gadget not in (W4, C4):
        raise ValueError("semi-problematic components are replaced by w4 or c4")
    _guard(g, comp, ComponentClass.SEMI_PROBLEMATIC)
    return _gadget(g, comp, gadget)


def splice_problematic_kernel(g: MultiGraph, comp: ComponentRef, kern: NiceKernel) -> MultiGraph:
    _guard(g, comp, ComponentClass.PROBLEMATIC)
    if set(kern.corners) != set(comp.corners):
        raise StructuralError(f"kernel corners {kern.corners} do not match {comp.corners}")
    out, slot = _cut_out(g, comp)
    part = kern.graph.copy()
    # the part's corner edge takes the placeholder's id
    a, b = part.endpoints(kern.corner_edge)
    part.remove_edge(kern.corner_edge)
    part.add_edge(a, b, eid=slot)
    splice(out, slot, part)
    return out
