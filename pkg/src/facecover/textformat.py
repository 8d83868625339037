"""Reading and writing instances in the line format.

    p facecover <n> <m> <t> <k>
    e <u> <v>        (m lines, 1-based, u < v, no duplicates)
    t <v>            (t lines)
    c ...            comments, ignored anywhere
"""

from __future__ import annotations

from pathlib import Path

from .multigraph import Instance, MultiGraph


class FormatError(ValueError):
    pass


def parse_instance(text: str) -> Instance:
    header = None
    edges: list[tuple[int, int]] = []
    terms: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        tag = parts[0]
        try:
            nums = [int(x) for x in parts[1:]] if tag != "p" else [int(x) for x in parts[2:]]
        except ValueError:
            raise FormatError(f"line {lineno}: expected integers") from None
        if tag == "p":
            if header is not None or len(parts) != 6 or parts[1] != "facecover":
                raise FormatError(f"line {lineno}: bad header")
            header = nums
        elif header is None:
            raise FormatError(f"line {lineno}: data before the header")
        elif tag == "e" and len(nums) == 2:
            edges.append((nums[0], nums[1]))
        elif tag == "t" and len(nums) == 1:
            terms.append(nums[0])
        else:
            raise FormatError(f"line {lineno}: unknown line {raw.strip()!r}")
    if header is None:
        raise FormatError("missing header line")
    n, m, t, k = header
    if min(n, m, t, k) < 0:
        raise FormatError("header values must be nonnegative")
    if len(edges) != m or len(terms) != t:
        raise FormatError(f"header promises {m} edges and {t} terminals, found {len(edges)} and {len(terms)}")
    for u, v in edges:
        if not (1 <= u < v <= n):
            raise FormatError(f"edge {u} {v} needs 1 <= u < v <= {n}")
    if len(set(edges)) != len(edges):
        raise FormatError("duplicate edge")
    if len(set(terms)) != len(terms) or any(not 1 <= x <= n for x in terms):
        raise FormatError("terminals must be distinct vertices")
    g = MultiGraph.from_edges(edges, terminals=terms, vertices=range(1, n + 1))
    return Instance(g, k)


def format_instance(inst: Instance, comments: list[str] = ()) -> str:
    g = inst.graph
    n = max(g.vertices, default=0)
    if sorted(g.vertices) != list(range(1, n + 1)):
        raise FormatError("vertices must be numbered 1..n before writing")
    pairs = sorted({(min(u, v), max(u, v)) for u, v in g.edges.values()})
    if len(pairs) != len(g.edges):
        raise FormatError("graph has parallel edges")
    lines = [f"c {c}" for c in comments]
    lines.append(f"p facecover {n} {len(pairs)} {len(g.terminals)} {inst.k}")
    lines += [f"e {u} {v}" for u, v in pairs]
    lines += [f"t {v}" for v in sorted(g.terminals)]
    return "\n".join(lines) + "\n"


def read_instance(path: str | Path) -> Instance:
    return parse_instance(Path(path).read_text())


def write_instance(inst: Instance, path: str | Path, comments: list[str] = ()) -> None:
    Path(path).write_text(format_instance(inst, comments))


def relabeled(inst: Instance) -> tuple[Instance, dict[int, int]]:
    """Copy with vertices renumbered 1..n in id order."""
    g = inst.graph
    ids = {v: i + 1 for i, v in enumerate(sorted(g.vertices))}
    pairs = [(ids[u], ids[v]) for u, v in (g.edges[e] for e in sorted(g.edges))]
    h = MultiGraph.from_edges(pairs, terminals={ids[v] for v in g.terminals}, vertices=ids.values())
    return Instance(h, inst.k), ids
