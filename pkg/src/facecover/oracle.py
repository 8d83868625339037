"""Exact brute-force solvers used as ground truth.

Nothing in this module relies on the decomposition-based machinery except
the optional SPR embedding enumerator, which is itself cross-checked
against plain rotation enumeration.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .config import DEFAULT_CONFIG
from .embedding import (
    BudgetExceeded,
    FaceSet,
    RotationSystem,
    enumerate_planar_rotations,
    rotation_count,
    trace_faces,
)
from .multigraph import MultiGraph, subdivide_edge

INF = math.inf
AUTO_ROTATION_LIMIT = 2000  # below this many rotation systems, filtering them is cheapest


@dataclass
class CoverResult:
    size: float  # INF when no cover exists
    faces: tuple[int, ...] = ()
    external_used: int = 0

    @property
    def unsat(self) -> bool:
        return self.size == INF


def min_set_cover(universe: int, sets: list[int], cap: float = INF) -> tuple[float, tuple[int, ...]]:
    """Exact minimum set cover over bitmasks by branch and bound.

    Returns ``(INF, ())`` when the universe cannot be covered, and any value
    ``>= cap`` may be reported as soon as the search proves it cannot go lower
    than ``cap``.
    """
    if universe == 0:
        return 0, ()
    union = 0
    for s in sets:
        union |= s
    if union & universe != universe:
        return INF, ()
    sets = [s & universe for s in sets]
    order = sorted(range(len(sets)), key=lambda i: -bin(sets[i]).count("1"))
    # greedy upper bound
    rem, greedy = universe, []
    while rem:
        i = max(order, key=lambda j: bin(sets[j] & rem).count("1"))
        greedy.append(i)
        rem &= ~sets[i]
    best = [len(greedy), tuple(sorted(greedy))]
    if best[0] <= 1:
        return best[0], best[1]
    biggest = max(bin(s).count("1") for s in sets)
    covering: dict[int, list[int]] = {}
    bits = universe
    while bits:
        b = bits & -bits
        covering[b] = [i for i in order if sets[i] & b]
        bits ^= b

    def search(rem: int, chosen: list[int]) -> None:
        if not rem:
            if len(chosen) < best[0]:
                best[0], best[1] = len(chosen), tuple(sorted(chosen))
            return
        # lower bound: remaining elements / largest set
        need = -(-bin(rem).count("1") // biggest)
        if len(chosen) + need >= min(best[0], cap):
            return
        pick, opts = None, None
        bits = rem
        while bits:
            b = bits & -bits
            cand = covering[b]
            if opts is None or len(cand) < len(opts):
                pick, opts = b, cand
            bits ^= b
        for i in opts:
            chosen.append(i)
            search(rem & ~sets[i], chosen)
            chosen.pop()

    search(universe, [])
    return best[0], best[1]


def _mask(face_sets: list[frozenset[int]], required: Iterable[int]) -> tuple[int, list[int]]:
    bit = {v: 1 << i for i, v in enumerate(sorted(required))}
    universe = (1 << len(bit)) - 1
    sets = [sum(bit[v] for v in f if v in bit) for f in face_sets]
    return universe, sets


def cover_faces(
    face_sets: list[frozenset[int]],
    required: Iterable[int],
    external: tuple[int, int] | None = None,
    exactly: int | None = None,
    cap: float = INF,
) -> CoverResult:
    """Minimum number of faces covering ``required``.

    With ``external`` and ``exactly`` given, the cover must contain exactly
    that many of the two external faces.
    """
    universe, sets = _mask(face_sets, required)
    if external is None or exactly is None:
        size, chosen = min_set_cover(universe, sets, cap)
        return CoverResult(size, chosen, 0)
    ext = list(dict.fromkeys(external))
    internal = [i for i in range(len(sets)) if i not in ext]
    if exactly > len(ext):
        return CoverResult(INF)
    best = CoverResult(INF)
    forced_sets = [()] if exactly == 0 else ([(x,) for x in ext] if exactly == 1 else [tuple(ext)])
    for forced in forced_sets:
        rem = universe
        for x in forced:
            rem &= ~sets[x]
        size, chosen = min_set_cover(rem, [sets[i] for i in internal], cap - len(forced))
        total = size + len(forced)
        if total < best.size:
            best = CoverResult(total, tuple(sorted([*forced, *(internal[i] for i in chosen)])), len(forced))
    return best


def embedded_fcn(
    g: MultiGraph,
    rot: RotationSystem,
    required: Iterable[int] | None = None,
    corner_edge: int | None = None,
    exactly: int | None = None,
) -> CoverResult:
    fs = trace_faces(g, rot)
    req = g.terminals if required is None else set(required)
    ext = fs.faces_of_edge(g, corner_edge) if corner_edge is not None else None
    return cover_faces(fs.vertex_sets(), req, ext, exactly)


# ---------------------------------------------------------------------------
# embeddings of arbitrary (small) graphs


def iter_embeddings(g: MultiGraph, method: str = "auto", config=DEFAULT_CONFIG) -> Iterator[RotationSystem]:
    """All planar embeddings of a connected graph by the chosen enumerator.

    ``auto`` filters raw rotation systems when there are few of them and
    otherwise assembles embeddings from the SPR-trees of the blocks, falling
    back to raw rotations if that is over budget.
    """
    if method not in ("rotation", "spr", "auto"):
        raise ValueError(f"unknown enumeration method {method!r}")
    few = rotation_count(g) <= AUTO_ROTATION_LIMIT
    if method == "rotation" or (method == "auto" and few):
        yield from enumerate_planar_rotations(g, config.rotation_budget)
        return
    try:
        first = list(itertools.islice(_spr_embeddings(g, config), 1))
    except BudgetExceeded:
        if method == "spr":
            raise
        yield from enumerate_planar_rotations(g, config.rotation_budget)
        return
    yield from first
    yield from itertools.islice(_spr_embeddings(g, config), 1, None)


def _spr_embeddings(g: MultiGraph, config) -> Iterator[RotationSystem]:
    from .decomposition import enumerate_embeddings_connected

    # the SPR route needs a simple graph: subdivide every parallel edge
    h, added = _simplify(g)
    for rot in enumerate_embeddings_connected(h, config.spr_budget):
        yield RotationSystem({v: [added.get(e, e) for e in rot.order[v]] for v in g.vertices})


def _simplify(g: MultiGraph) -> tuple[MultiGraph, dict[int, int]]:
    h = g.copy()
    seen = set()
    added = {}
    for e in sorted(g.edges):
        u, v = g.edges[e]
        key = (min(u, v), max(u, v))
        if key in seen:
            before = set(h.edges)
            h = subdivide_edge(h, e)
            (new,) = set(h.edges) - before
            added[new] = e
        seen.add(key)
    return h, added


def face_signatures(g: MultiGraph, method: str = "auto", corner_edge: int | None = None, config=DEFAULT_CONFIG):
    """Distinct (face vertex sets, external face pair) over all embeddings."""
    seen = set()
    for rot in iter_embeddings(g, method, config):
        fs = trace_faces(g, rot, check=False)
        sets = fs.vertex_sets()
        if corner_edge is None:
            key = (tuple(sorted(tuple(sorted(f)) for f in sets)), None)
            if key in seen:
                continue
            seen.add(key)
            yield sets, None
        else:
            a, b = fs.faces_of_edge(g, corner_edge)
            ext = tuple(sorted((tuple(sorted(sets[a])), tuple(sorted(sets[b])))))
            rest = sorted(tuple(sorted(f)) for i, f in enumerate(sets) if i not in (a, b))
            key = (tuple(rest), ext)
            if key in seen:
                continue
            seen.add(key)
            yield sets, (a, b)


def fcn_exact(g: MultiGraph, terminals: Iterable[int] | None = None, method: str = "auto", config=DEFAULT_CONFIG) -> float:
    """Face cover number: minimum over all embeddings; disconnected parts are nested into one face."""
    terms = set(g.terminals if terminals is None else terminals)
    per = []
    for comp in g.components():
        req = terms & comp
        if not req:
            continue
        sub = g.subgraph(comp)
        if len(comp) == 1:
            per.append(1)
            continue
        best = INF
        for sets, _ in face_signatures(sub, method, None, config):
            size = cover_faces(sets, req, cap=best).size
            if size < best:
                best = size
                if best == 1:
                    break
        per.append(best)
    if not per:
        return 0
    return sum(per) - (len(per) - 1)


# ---------------------------------------------------------------------------
# profiles


@dataclass
class FcnProfile:
    """Saturated face cover numbers of an enhancement.

    ``f0_minus`` is keyed by the corner subset removed from the terminals.
    Finite values above ``k`` are stored as ``k + 1``; ``INF`` means no cover.
    """

    k: int
    f0: float
    f1: float
    f2: float
    f0_minus: dict[frozenset, float] = field(default_factory=dict)

    def values(self) -> dict[str, float]:
        out = {"f0": self.f0, "f1": self.f1, "f2": self.f2}
        for c, v in sorted(self.f0_minus.items(), key=lambda kv: sorted(kv[0])):
            out["f0-" + ",".join(map(str, sorted(c)))] = v
        return out

    def matches(self, other: "FcnProfile") -> bool:
        a, b = self.values(), other.values()
        return a.keys() == b.keys() and all(same_capped(a[x], b[x], self.k) for x in a)

    def to_json(self) -> dict:
        return {key: ("inf" if v == INF else ("above" if v > self.k else int(v))) for key, v in self.values().items()}


def saturate(v: float, k: int) -> float:
    return v if v == INF or v <= k else k + 1


def same_capped(a: float, b: float, k: int) -> bool:
    return a == b or (a > k and b > k)


def corner_subsets(c1: int, c2: int) -> list[frozenset]:
    return [frozenset(), frozenset({c1}), frozenset({c2}), frozenset({c1, c2})]


def fcn_profile_exact(
    enh: MultiGraph,
    corners: tuple[int, int],
    corner_edge: int,
    k: int,
    terminals: Iterable[int] | None = None,
    method: str = "auto",
    config=DEFAULT_CONFIG,
) -> FcnProfile:
    """All of f0, f1, f2 and f0 under corner removal, minimised over every embedding."""
    terms = set(enh.terminals if terminals is None else terminals)
    c1, c2 = corners
    best = {"f0": INF, "f1": INF, "f2": INF}
    minus = {c: INF for c in corner_subsets(c1, c2)}
    cap = k + 1
    for sets, ext in face_signatures(enh, method, corner_edge, config):
        for j, key in enumerate(("f0", "f1", "f2")):
            if best[key] == 0:
                continue
            r = cover_faces(sets, terms, ext, j, cap=min(best[key], cap))
            best[key] = min(best[key], r.size)
        for c in minus:
            if minus[c] == 0:
                continue
            r = cover_faces(sets, terms - c, ext, 0, cap=min(minus[c], cap))
            minus[c] = min(minus[c], r.size)
    prof = FcnProfile(
        k,
        saturate(best["f0"], k),
        saturate(best["f1"], k),
        saturate(best["f2"], k),
        {c: saturate(v, k) for c, v in minus.items()},
    )
    return prof


# ---------------------------------------------------------------------------
# component classes from their definitions


@dataclass
class ExactClassFacts:
    unproblematic: bool
    efc: bool
    internal: dict[frozenset, bool]
    fcn_one: bool = False

    def tag(self) -> str:
        if self.unproblematic:
            return "Unproblematic"
        if self.efc and self.fcn_one:
            return "SemiProblematic"
        return "Problematic"


def classify_exact(
    enh: MultiGraph,
    corners: tuple[int, int],
    corner_edge: int,
    terminals: Iterable[int] | None = None,
    method: str = "auto",
    config=DEFAULT_CONFIG,
) -> ExactClassFacts:
    """Class predicates evaluated over every embedding of the enhancement.

    Only non-corner terminals count.  ``internal[S]`` asks for one internal
    face holding those terminals and the corner subset ``S``.
    """
    given = set(enh.terminals if terminals is None else terminals) & enh.vertices
    terms = given - set(corners)
    c1, c2 = corners
    unp = efc = False
    internal = {c: False for c in corner_subsets(c1, c2)}
    for sets, (a, b) in face_signatures(enh, method, corner_edge, config):
        unp = unp or terms <= sets[a] or terms <= sets[b]
        efc = efc or terms <= sets[a] | sets[b]
        for c in internal:
            if not internal[c]:
                need = terms | c
                internal[c] = any(need <= f for i, f in enumerate(sets) if i not in (a, b))
    comp = enh.copy()
    comp.remove_edge(corner_edge)
    one = fcn_exact(comp, given, method, config) <= 1
    return ExactClassFacts(unp, efc, internal, one)


# ---------------------------------------------------------------------------
# nice-kernel verification


@dataclass
class KernelVerdict:
    k1: bool  # corners and the corner edge present
    k2: bool  # f0, f1, f2 agree up to saturation
    k3: bool  # f0 agrees for every removed corner subset
    internal_faces: float  # fewest internal faces any optimal cover uses
    vertices: int
    ratio: float  # internal_faces / vertices ** (1/3)
    original: FcnProfile | None = None
    kernel: FcnProfile | None = None

    @property
    def ok(self) -> bool:
        return self.k1 and self.k2 and self.k3

    def to_json(self) -> dict:
        return {
            "K1": self.k1, "K2": self.k2, "K3": self.k3,
            "internal_faces": None if self.internal_faces == INF else self.internal_faces,
            "vertices": self.vertices, "ratio": self.ratio,
            "original": self.original.to_json() if self.original else None,
            "kernel": self.kernel.to_json() if self.kernel else None,
        }


def verify_nice_kernel(
    orig: MultiGraph,
    corners: tuple[int, int],
    corner_edge: int,
    kern: MultiGraph,
    k: int,
    kern_corner_edge: int | None = None,
    config=DEFAULT_CONFIG,
) -> KernelVerdict:
    """Check (K1) structurally and (K2)/(K3) by exact profiles; report the size ratio.

    Raises ``BudgetExceeded`` when either graph is too large to enumerate.
    """
    c1, c2 = corners
    ke = corner_edge if kern_corner_edge is None else kern_corner_edge
    k1 = c1 in kern.vertices and c2 in kern.vertices and ke in kern.edges and set(kern.endpoints(ke)) == {c1, c2}
    p = fcn_profile_exact(orig, corners, corner_edge, k, config=config)
    if not k1:
        return KernelVerdict(False, False, False, INF, len(kern.vertices), 0.0, p, None)
    q = fcn_profile_exact(kern, corners, ke, k, config=config)
    k2 = all(same_capped(getattr(p, f), getattr(q, f), k) for f in ("f0", "f1", "f2"))
    k3 = all(same_capped(p.f0_minus[c], q.f0_minus[c], k) for c in p.f0_minus)
    finite = [v for v in (q.f0, q.f1 - 1, q.f2 - 2) if v != INF]
    internal = max(0.0, min(finite)) if finite else INF
    n = len(kern.vertices)
    ratio = internal / n ** (1 / 3) if internal != INF and n else 0.0
    return KernelVerdict(k1, k2, k3, internal, n, ratio, p, q)
