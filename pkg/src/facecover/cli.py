"""Command-line entry point.

Exit codes: 0 success, 1 a check failed, 2 malformed input, 3 budget refusal.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .classify import Classifier
from .config import RunConfig
from .decomposition import block_cut_tree, spr_tree
from .embedding import BudgetExceeded
from .kernelize import kernelize
from .multigraph import Instance, MultiGraph, StructuralError
from .oracle import INF, fcn_exact
from .textformat import FormatError, format_instance, read_instance

EXIT_OK, EXIT_FAILED, EXIT_MALFORMED, EXIT_BUDGET = 0, 1, 2, 3


def _config(args) -> RunConfig:
    return RunConfig(rotation_budget=args.rotation_budget, spr_budget=args.spr_budget, seed=args.seed)


def _write(text: str, path: str | None) -> None:
    if path in (None, "-"):
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def _fmt(v: float) -> str:
    return "inf" if v == INF else str(int(v))


def cmd_kernelize(args) -> int:
    inst = read_instance(args.input)
    kern, report = kernelize(inst, budget=args.profile_budget)
    _write(format_instance(kern), args.output)
    if args.trace:
        _write(json.dumps(report.to_json(), indent=2, sort_keys=True) + "\n", args.trace)
    return EXIT_OK


def cmd_solve(args) -> int:
    inst = read_instance(args.input)
    f = fcn_exact(inst.graph, config=_config(args))
    print(f"fcn = {_fmt(f)}")
    print("answer =", "yes" if f <= inst.k else "no")
    return EXIT_OK


def _blocks(g: MultiGraph):
    """Yield (component index, block index, block graph) for blocks with >= 3 vertices."""
    for ci, comp in enumerate(sorted(g.components(), key=min)):
        sub = g.subgraph(comp)
        if len(comp) < 2:
            continue
        bct = block_cut_tree(sub)
        for bi, verts in enumerate(bct.blocks):
            if len(verts) >= 3:
                block = sub.edge_subgraph(bct.block_edges[bi])
                block.terminals = verts & g.terminals
                yield ci, bi, block


def cmd_classify(args) -> int:
    inst = read_instance(args.input)
    g = inst.graph
    for ci, bi, block in _blocks(g):
        tree = spr_tree(block)
        cls = Classifier(tree, block.terminals)
        for nid in tree.postorder():
            n = tree.nodes[nid]
            c = tree.corners(nid)
            print(f"component {ci} block {bi} node {nid} {n.type} corners {c.c1} {c.c2} "
                  f"{cls.classify(nid).value}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    inst = read_instance(args.input)
    g = inst.graph
    dot = ["graph spr {", "  compound=true;"]
    for ci, bi, block in _blocks(g):
        tree = spr_tree(block)
        print(f"component {ci} block {bi}: {len(block.vertices)} vertices, {len(tree.nodes)} nodes")
        for nid in tree.postorder():
            n = tree.nodes[nid]
            sk = n.skeleton
            virt = set(sk.virtual_edges())
            parent = "root" if n.parent is None else f"parent {n.parent}"
            print(f"  node {nid} {n.type} {parent} vertices {sorted(sk.vertices)}")
            tag = f"c{ci}b{bi}n{nid}"
            dot.append(f"  subgraph cluster_{tag} {{")
            dot.append(f'    label="{n.type} {nid}";')
            for v in sorted(sk.vertices):
                shape = "doublecircle" if v in block.terminals else "circle"
                dot.append(f'    {tag}v{v} [label="{v}", shape={shape}];')
            for e in sorted(sk.edges):
                u, v = sk.endpoints(e)
                style = "dashed" if e in virt else "solid"
                dot.append(f"    {tag}v{u} -- {tag}v{v} [style={style}];")
            dot.append("  }")
            if n.parent is not None:
                u, _ = sk.endpoints(n.parent_edge)
                ptag = f"c{ci}b{bi}n{n.parent}"
                dot.append(f"  {tag}v{u} -- {ptag}v{u} [ltail=cluster_{tag}, lhead=cluster_{ptag}, color=gray];")
    dot.append("}")
    if args.dot:
        _write("\n".join(dot) + "\n", args.dot)
    return EXIT_OK


def cmd_verify(args) -> int:
    orig = read_instance(args.original)
    kern = read_instance(args.kernel)
    cfg = _config(args)
    a = fcn_exact(orig.graph, config=cfg)
    b = fcn_exact(kern.graph, config=cfg)
    verdict = {
        "original": {"fcn": None if a == INF else a, "k": orig.k, "answer": a <= orig.k},
        "kernel": {"fcn": None if b == INF else b, "k": kern.k, "answer": b <= kern.k},
        "k_not_larger": kern.k <= orig.k,
    }
    verdict["pass"] = verdict["k_not_larger"] and (a <= orig.k) == (b <= kern.k)
    print(json.dumps(verdict, sort_keys=True))
    return EXIT_OK if verdict["pass"] else EXIT_FAILED


def cmd_gen(args) -> int:
    from .harness import gen_biconnected, gen_planar

    if args.biconnected:
        import random

        g = gen_biconnected(args.seed, args.n, args.density)
        rng = random.Random(args.seed)
        g.terminals = set(rng.sample(sorted(g.vertices), round(args.terminals * args.n)))
        inst = Instance(g, args.k)
    else:
        inst = gen_planar(args.seed, args.n, args.density, args.terminals, args.k)
    _write(format_instance(inst, [f"seed {args.seed} n {args.n} density {args.density}"]), args.output)
    return EXIT_OK


def cmd_suite(args) -> int:
    from .harness import SUITES, run_suite

    if args.name not in SUITES:
        print(f"unknown suite {args.name!r}; choose from {', '.join(SUITES)}", file=sys.stderr)
        return EXIT_MALFORMED
    kw = {}
    if args.count is not None:
        key = {"oracle-cross": "seeds", "rule-safeness": "per_rule", "structural": "extra"}.get(args.name, "count")
        kw[key] = args.count
    if args.dump:
        kw["dump_dir"] = args.dump
    result = run_suite(args.name, **kw)
    print(json.dumps(result, indent=2, sort_keys=True, default=str))
    return EXIT_OK if result.get("passed") else EXIT_FAILED


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="facecover", description="Face cover number kernels for planar graphs.")
    p.add_argument("--rotation-budget", type=int, default=RunConfig.rotation_budget)
    p.add_argument("--spr-budget", type=int, default=RunConfig.spr_budget)
    p.add_argument("--seed", type=int, default=0)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("kernelize", help="kernelize an instance")
    s.add_argument("input")
    s.add_argument("-o", "--output")
    s.add_argument("--trace", help="write the JSON report here")
    s.add_argument("--profile-budget", type=int, default=200_000)
    s.set_defaults(run=cmd_kernelize)

    s = sub.add_parser("solve", help="exact face cover number")
    s.add_argument("--exact", action="store_true", required=True)
    s.add_argument("input")
    s.set_defaults(run=cmd_solve)

    s = sub.add_parser("classify", help="class of every SPR-tree node")
    s.add_argument("input")
    s.set_defaults(run=cmd_classify)

    s = sub.add_parser("decompose", help="block and SPR structure")
    s.add_argument("input")
    s.add_argument("--dot", help="write the SPR-trees as DOT here")
    s.set_defaults(run=cmd_decompose)

    s = sub.add_parser("verify", help="check that a kernel has the same answer")
    s.add_argument("original")
    s.add_argument("kernel")
    s.set_defaults(run=cmd_verify)

    s = sub.add_parser("gen", help="seeded random planar instance")
    s.add_argument("--seed", type=int, default=0, dest="seed")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--density", type=float, default=0.6)
    s.add_argument("--terminals", type=float, default=0.3, help="fraction of vertices")
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--biconnected", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(run=cmd_gen)

    s = sub.add_parser("suite", help="run a property suite")
    s.add_argument("name")
    s.add_argument("--count", type=int)
    s.add_argument("--dump", help="directory for failing inputs")
    s.set_defaults(run=cmd_suite)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.run(args)
    except (FormatError, StructuralError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED
    except BudgetExceeded as exc:
        print(f"budget: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MALFORMED


if __name__ == "__main__":
    sys.exit(main())
