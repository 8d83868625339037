"""Recognition of terminal-free, unproblematic, semi-problematic and problematic components.

Three dynamic programs run bottom-up over the SPR-tree.  For a node ``t``
with corners ``c1, c2`` only the non-corner terminals of the induced graph
count:

* ``unproblematic`` - one external face of the enhancement covers them;
* ``efc`` - the two external faces jointly cover them;
* ``internal[S]`` - one internal face covers them together with the corner
  subset ``S``.

A component is semi-problematic when it is EFC, not unproblematic, and has
face cover number one once the corner edge is dropped.  Dropping the corner
edge merges the two external faces, so EFC already implies the last part.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .decomposition import P, R, S, SprTree
from .embedding import planar_embedding, trace_faces


class ComponentClass(enum.Enum):
    TERMINAL_FREE = "TerminalFree"
    UNPROBLEMATIC = "Unproblematic"
    SEMI_PROBLEMATIC = "SemiProblematic"
    PROBLEMATIC = "Problematic"


@dataclass
class NodeFacts:
    corners: tuple[int, int]
    vertices: frozenset[int]
    terminals: frozenset[int]  # non-corner terminals of the induced graph
    unproblematic: bool = False
    efc: bool = False
    internal: dict[frozenset, bool] = field(default_factory=dict)

    @property
    def terminal_free(self) -> bool:
        return not self.terminals


@dataclass
class SkeletonFaces:
    """Faces of an R skeleton in its unique embedding, as vertex and edge sets."""

    vertices: list[frozenset[int]]
    edges: list[frozenset[int]]
    external: tuple[int, int]


class Classifier:
    """Bottom-up DP tables for every node of ``tree``."""

    def __init__(self, tree: SprTree, terminals: set[int] | None = None) -> None:
        self.tree = tree
        self.terminals = set(tree.graph.terminals if terminals is None else terminals)
        self.facts: dict[int, NodeFacts] = {}
        self._faces: dict[int, SkeletonFaces] = {}
        for node in tree.postorder():
            self._visit(node)

    # public queries -----------------------------------------------------

    def is_terminal_free(self, node: int) -> bool:
        return self.facts[node].terminal_free

    def is_unproblematic(self, node: int) -> bool:
        return self.facts[node].unproblematic

    def is_efc(self, node: int) -> bool:
        return self.facts[node].efc

    def has_internal_cover(self, node: int, extra: frozenset = frozenset()) -> bool:
        return self.facts[node].internal[frozenset(extra)]

    def classify(self, node: int) -> ComponentClass:
        f = self.facts[node]
        if f.terminal_free:
            return ComponentClass.TERMINAL_FREE
        if f.unproblematic:
            return ComponentClass.UNPROBLEMATIC
        if f.efc and self.fcn_one(node):
            return ComponentClass.SEMI_PROBLEMATIC
        return ComponentClass.PROBLEMATIC

    def fcn_one(self, node: int) -> bool:
        """Whether the component alone, corner edge removed, has one face covering its terminals."""
        f = self.facts[node]
        # the merged external face holds both corners, so EFC is enough
        return f.terminal_free or f.efc or f.internal[frozenset(set(f.corners) & self.terminals)]

    def fcn_at_most_one(self) -> bool:
        """Whether the whole graph of the tree has a single face covering all terminals."""
        root = self.facts[self.tree.root]
        corner_terms = frozenset(set(root.corners) & self.terminals)
        return root.terminal_free or root.unproblematic or root.internal[corner_terms]

    def skeleton_faces(self, node: int) -> SkeletonFaces:
        if node not in self._faces:
            n = self.tree.nodes[node]
            sk = n.skeleton
            rot = planar_embedding(sk)
            fs = trace_faces(sk, rot, check=False)
            corner = self.tree.corners(node).edge
            self._faces[node] = SkeletonFaces(
                fs.vertex_sets(), [f.edges for f in fs.faces], fs.faces_of_edge(sk, corner)
            )
        return self._faces[node]

    # DP -----------------------------------------------------------------

    def _visit(self, node: int) -> None:
        tree = self.tree
        n = tree.nodes[node]
        c = tree.corners(node)
        corners = (c.c1, c.c2)
        verts = set(n.skeleton.vertices)
        for child in tree.children(node):
            verts |= self.facts[child].vertices
        facts = NodeFacts(
            corners,
            frozenset(verts),
            frozenset((verts & self.terminals) - set(corners)),
        )
        self.facts[node] = facts
        skel_terms = (n.skeleton.vertices & self.terminals) - set(corners)
        kids = {e: self.facts[ch] for e, ch in n.children.items()}
        bearing = {e: f for e, f in kids.items() if not f.terminal_free}
        if n.type == S:
            self._s_node(node, facts, skel_terms, kids, bearing)
        elif n.type == P:
            self._p_node(node, facts, kids, bearing)
        else:
            self._r_node(node, facts, skel_terms, kids, bearing)
        if facts.terminal_free:
            facts.unproblematic = True
            facts.efc = True

    def _subsets(self, corners: tuple[int, int]) -> list[frozenset]:
        a, b = corners
        return [frozenset(), frozenset({a}), frozenset({b}), frozenset({a, b})]

    def _s_node(self, node, facts, skel_terms, kids, bearing) -> None:
        facts.unproblematic = all(f.unproblematic for f in kids.values())
        facts.efc = all(f.efc for f in kids.values())
        sk = self.tree.nodes[node].skeleton
        for extra in self._subsets(facts.corners):
            need = set(skel_terms) | extra
            ok = False
            for e, f in kids.items():
                ends = set(sk.endpoints(e))
                if not need <= ends:
                    continue
                if any(g is not f for g in bearing.values()):
                    continue
                if f.internal[frozenset(need & ends)]:
                    ok = True
                    break
            facts.internal[extra] = ok

    def _p_node(self, node, facts, kids, bearing) -> None:
        facts.unproblematic = len(bearing) <= 1 and all(f.unproblematic for f in bearing.values())
        facts.efc = len(bearing) <= 2 and all(f.unproblematic for f in bearing.values())
        for extra in self._subsets(facts.corners):
            # a skeleton gap between two non-corner items is internal and holds both poles
            ok = facts.efc
            if not ok and len(bearing) == 1:
                (f,) = bearing.values()
                ok = f.internal[extra]
            facts.internal[extra] = ok

    def _r_node(self, node, facts, skel_terms, kids, bearing) -> None:
        faces = self.skeleton_faces(node)
        sk = self.tree.nodes[node].skeleton
        ext = set(faces.external)

        def face_ok(i: int, need: set[int]) -> bool:
            if not need <= faces.vertices[i]:
                return False
            return all(e in faces.edges[i] and f.unproblematic for e, f in bearing.items())

        facts.unproblematic = any(face_ok(i, set(skel_terms)) for i in ext)
        efc = skel_terms <= (faces.vertices[faces.external[0]] | faces.vertices[faces.external[1]])
        for e, f in bearing.items():
            on = [i for i in ext if e in faces.edges[i]]
            if not on:
                efc = False
            elif len(on) == 1 and not f.unproblematic:
                efc = False
            elif len(on) == 2 and not f.efc:
                efc = False
        facts.efc = efc
        internal_faces = [i for i in range(len(faces.vertices)) if i not in ext]
        for extra in self._subsets(facts.corners):
            need = set(skel_terms) | extra
            ok = any(face_ok(i, need) for i in internal_faces)
            if not ok:
                for e, f in kids.items():
                    ends = set(sk.endpoints(e))
                    if not need <= ends:
                        continue
                    if any(g is not f for g in bearing.values()):
                        continue
                    if f.internal[frozenset(need & ends)]:
                        ok = True
                        break
            facts.internal[extra] = ok


def classify(tree: SprTree, node: int, k: int | None = None) -> ComponentClass:
    return Classifier(tree).classify(node)


def is_terminal_free(tree: SprTree, node: int) -> bool:
    return Classifier(tree).is_terminal_free(node)


def is_unproblematic(tree: SprTree, node: int) -> bool:
    return Classifier(tree).is_unproblematic(node)


def is_efc(tree: SprTree, node: int) -> bool:
    return Classifier(tree).is_efc(node)
