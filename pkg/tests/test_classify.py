from hypothesis import given, settings
from hypothesis import strategies as st

from facecover.classify import Classifier, ComponentClass
from facecover.decomposition import P, S, enhancement, spr_tree
from facecover.harness import gen_biconnected
from facecover.kernelize.parts import W4, build_part
from facecover.multigraph import IdSource, MultiGraph
from facecover.oracle import classify_exact


def theta(paths, terminals):
    """Poles 1 and 2 joined by paths with the given interior lengths."""
    edges, nxt = [], 3
    for length in paths:
        prev = 1
        for _ in range(length):
            edges.append((prev, nxt))
            prev, nxt = nxt, nxt + 1
        edges.append((prev, 2))
    return MultiGraph.from_edges(edges, terminals=terminals)


def child_classes(g, root_edge=None):
    tree = spr_tree(g, root_edge)
    cls = Classifier(tree)
    return tree, {n: cls.classify(n) for n in tree.postorder() if n != tree.root}


def test_terminal_free_children():
    g = theta([1, 1, 1], terminals=[])
    _, got = child_classes(g)
    assert set(got.values()) == {ComponentClass.TERMINAL_FREE}


def test_single_terminal_path_is_unproblematic():
    g = theta([1, 2, 1], terminals=[5])
    tree, got = child_classes(g)
    assert ComponentClass.UNPROBLEMATIC in got.values()


def test_p_node_with_two_terminal_children_is_not_unproblematic():
    # root on the first path; the P node below it has two terminal-bearing children
    g = theta([1, 1, 1], terminals=[4, 5])
    tree = spr_tree(g, root_edge=1)
    cls = Classifier(tree)
    p = next(n for n in tree.postorder() if tree.nodes[n].type == P)
    assert p != tree.root
    assert cls.classify(p) == ComponentClass.SEMI_PROBLEMATIC
    enh, c = enhancement(tree, p)
    assert classify_exact(enh, (c.c1, c.c2), c.edge).tag() == "SemiProblematic"


def test_three_terminal_children_are_problematic():
    g = theta([1, 1, 1, 1], terminals=[4, 5, 6])
    tree = spr_tree(g, root_edge=1)
    cls = Classifier(tree)
    p = next(n for n in tree.postorder() if tree.nodes[n].type == P)
    assert cls.classify(p) == ComponentClass.PROBLEMATIC


def test_w4_gadget_as_component():
    g = build_part(W4, 1, 2, 1, IdSource(3, 2))
    host = g.copy()
    host.kinds[1] = "real"
    tree = spr_tree(host, 1)
    assert Classifier(tree).classify(tree.root) == ComponentClass.SEMI_PROBLEMATIC


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(4, 8), st.integers(0, 2**8 - 1))
def test_dp_matches_definitions(seed, n, mask):
    g = gen_biconnected(seed, n, 0.5)
    terms = {v for v in g.vertices if mask >> (v - 1) & 1}
    for root_edge in sorted(g.edges)[:3]:
        tree = spr_tree(g, root_edge)
        cls = Classifier(tree, terms)
        for node in tree.postorder():
            if node == tree.root:
                continue
            enh, c = enhancement(tree, node)
            inner = (enh.vertices & terms) - {c.c1, c.c2}
            want = "TerminalFree" if not inner else classify_exact(enh, (c.c1, c.c2), c.edge, terms).tag()
            assert cls.classify(node).value == want
