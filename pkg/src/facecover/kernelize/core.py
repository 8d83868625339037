"""Shared types for the node kernelizers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from ..classify import ComponentClass
from ..multigraph import MultiGraph
from ..oracle import INF, FcnProfile


@dataclass
class NiceKernel:
    """Replacement for the enhancement of one SPR node.

    ``graph`` holds both corners and the corner edge (virtual unless the node
    is the root).  ``profile`` is ``None`` when it could not be computed
    within budget; the kernel is then only as reduced as unconditional steps
    allow.
    """

    node: int
    graph: MultiGraph
    corners: tuple[int, int]
    corner_edge: int
    cls: ComponentClass
    profile: FcnProfile | None
    witness: int = 0  # internal faces in a cheapest cover, when known

    @property
    def terminals(self) -> set[int]:
        return self.graph.terminals


@dataclass
class RuleFiring:
    rule: str
    node_id: int | None
    before: dict
    after: dict
    status: str = "applied"
    detail: str = ""

    def to_json(self) -> dict:
        out = {"rule": self.rule, "node_id": self.node_id, "before": self.before, "after": self.after}
        if self.status != "applied":
            out["status"] = self.status
        if self.detail:
            out["detail"] = self.detail
        return out


class NoInstance(Exception):
    """A counting bound proved the face cover number exceeds k."""

    def __init__(self, rule: str, node: int | None, detail: str = "") -> None:
        super().__init__(f"{rule} at node {node}: {detail}")
        self.rule = rule
        self.node = node
        self.detail = detail


# observer(rule, node, before_graph, after_graph, corners, corner_edge)
Observer = Callable[[str, int, MultiGraph, MultiGraph, tuple, int], None]


@dataclass
class Context:
    k: int
    terminals: set[int]
    budget: int = 200_000
    observer: Observer | None = None
    firings: list[RuleFiring] = field(default_factory=list)

    def log(self, rule, node, before, after, status="applied", detail="") -> None:
        self.firings.append(RuleFiring(rule, node, before, after, status, detail))


def size_of(g: MultiGraph) -> dict:
    return {"vertices": len(g.vertices), "edges": len(g.edges), "terminals": len(g.terminals)}


def profile_says_no(p: FcnProfile | None, k: int) -> bool:
    """Every way of covering the component needs more than k faces."""
    if p is None:
        return False
    weakest = p.f0_minus[max(p.f0_minus, key=len)]
    return min(weakest, p.f1, p.f2) > k


def same(p: FcnProfile | None, q: FcnProfile | None) -> bool:
    return p is not None and q is not None and p.matches(q)


def internal_witness(p: FcnProfile | None) -> int:
    if p is None:
        return 0
    vals = [v for v in (p.f0, p.f1 - 1, p.f2 - 2) if v != INF]
    return int(max(0, min(vals))) if vals else 0
