"""Skeleton slots: a real edge, or a child held as its kernel or as a gadget."""

from __future__ import annotations

from dataclasses import dataclass

from ..classify import ComponentClass
from ..multigraph import IdSource, MultiGraph
from ..oracle import FcnProfile
from ..profiles import ChildTable, table
from .core import NiceKernel
from .parts import C4, EDGE, KERNEL, P3, TRIANGLE, W4, build_part, gadget_profile, relabel_profile, unmark_corner

_GADGET_SIZE = {EDGE: (0, 1, 0), P3: (1, 2, 1), TRIANGLE: (1, 3, 1), C4: (4, 6, 2), W4: (5, 10, 2)}


@dataclass
class Slot:
    eid: int
    kernel: NiceKernel | None = None  # None: a real edge
    repl: str = KERNEL

    @property
    def real(self) -> bool:
        return self.kernel is None

    @property
    def cls(self) -> ComponentClass | None:
        return None if self.kernel is None else self.kernel.cls

    def with_repl(self, repl: str) -> "Slot":
        return Slot(self.eid, self.kernel, repl)

    def rename(self, alias: dict[int, int]) -> dict[int, int]:
        return {c: find(alias, c) for c in self.kernel.corners}

    def profile(self, k: int, u: int, v: int, terms: set[int], alias: dict[int, int]) -> FcnProfile | None:
        """Profile of this slot's part seen between current vertices ``u`` and ``v``."""
        if self.repl != KERNEL:
            return gadget_profile(self.repl, k, u, v, terms)
        p = self.kernel.profile
        if p is None:
            return None
        p = relabel_profile(p, self.rename(alias))
        for c in (u, v):
            if c not in terms:
                p = unmark_corner(p, c)
        return p

    def table(self, k: int, u: int, v: int, terms: set[int], alias: dict[int, int]) -> ChildTable | None:
        p = self.profile(k, u, v, terms, alias)
        return None if p is None else table(p, (u, v), terms)

    def part(self, u: int, v: int, ids: IdSource, alias: dict[int, int]) -> tuple[MultiGraph, dict[int, int]]:
        if self.repl == KERNEL:
            return self.kernel.graph, self.rename(alias)
        return build_part(self.repl, u, v, self.eid, ids), {}

    def size(self) -> tuple[int, int, int]:
        """Interior vertices, edges without the corner edge, interior terminals."""
        if self.kernel is None:
            return 0, 1, 0
        if self.repl != KERNEL:
            return _GADGET_SIZE[self.repl]
        g = self.kernel.graph
        corners = set(self.kernel.corners)
        return len(g.vertices) - 2, len(g.edges) - 1, len(g.terminals - corners)


def find(alias: dict[int, int], x: int) -> int:
    while x in alias:
        x = alias[x]
    return x
