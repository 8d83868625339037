from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from facecover.decomposition import (
    P,
    R,
    S,
    block_cut_tree,
    enhancement,
    enumerate_embeddings_spr,
    is_biconnected,
    is_triconnected,
    spr_choice_count,
    spr_tree,
)
from facecover.harness import gen_biconnected
from facecover.kernelize.rigid import _separator_vertices_brute, separator_vertices
from facecover.kernelize.rigid import suppressed
from facecover.multigraph import MultiGraph, StructuralError

from conftest import complete, cycle, wheel


def test_cycle_is_one_s_node():
    t = spr_tree(cycle(6))
    assert [n.type for n in t.nodes.values()] == [S]


def test_k4_is_one_r_node():
    t = spr_tree(complete(4))
    assert [n.type for n in t.nodes.values()] == [R]


def test_theta_graph():
    # three internally disjoint 1-5 paths
    g = MultiGraph.from_edges([(1, 2), (2, 5), (1, 3), (3, 5), (1, 4), (4, 5)])
    t = spr_tree(g)
    assert Counter(n.type for n in t.nodes.values()) == {P: 1, S: 3}


def test_rejects_non_biconnected():
    with pytest.raises(StructuralError):
        spr_tree(MultiGraph.from_edges([(1, 2), (2, 3)]))


def test_block_cut_tree_of_bowtie():
    g = MultiGraph.from_edges([(1, 2), (2, 3), (1, 3), (3, 4), (4, 5), (3, 5)])
    bct = block_cut_tree(g)
    assert bct.cutvertices == {3}
    assert sorted(sorted(b) for b in bct.blocks) == [[1, 2, 3], [3, 4, 5]]


def test_root_edge_is_corner_edge():
    g = wheel(5)
    e = max(g.edges)
    t = spr_tree(g, root_edge=e)
    assert t.corners(t.root).edge == e


def check_canonical(g):
    t = spr_tree(g)
    real = Counter()
    virtual = Counter()
    for nid, n in t.nodes.items():
        sk = n.skeleton
        if n.type == R:
            assert is_triconnected(sk)
        elif n.type == S:
            assert len(sk.vertices) == len(sk.edges) >= 3
            assert all(sk.degree(v) == 2 for v in sk.vertices)
        else:
            assert len(sk.vertices) == 2 and len(sk.edges) >= 3
        for e in sk.real_edges():
            real[e] += 1
        for e in sk.virtual_edges():
            virtual[e] += 1
        for c in t.children(nid):
            assert not (n.type == t.nodes[c].type and n.type in (S, P))
    assert real == Counter(g.edges.keys())
    assert all(v == 2 for v in virtual.values())
    return t


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(3, 22), st.sampled_from([0.2, 0.5, 0.8]))
def test_tree_is_canonical(seed, n, density):
    g = gen_biconnected(seed, n, density)
    assert is_biconnected(g)
    check_canonical(g)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6), st.integers(3, 9))
def test_enhancement_of_root_is_the_whole_graph(seed, n):
    g = gen_biconnected(seed, n, 0.5)
    t = spr_tree(g)
    enh, c = enhancement(t, t.root)
    assert enh.vertices == g.vertices
    assert {c.c1, c.c2} == set(g.endpoints(c.edge))


def test_spr_embeddings_count_matches_choices():
    g = MultiGraph.from_edges([(1, 2), (2, 5), (1, 3), (3, 5), (1, 4), (4, 5)])
    t = spr_tree(g)
    rots = {r.key() for r in enumerate_embeddings_spr(t)}
    assert len(rots) == spr_choice_count(t)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10**6), st.integers(13, 30), st.sampled_from([0.1, 0.4, 0.8]))
def test_separator_vertices_match_brute_force(seed, n, density):
    g = gen_biconnected(seed, n, density)
    g.remove_edge(min(g.edges))
    assert separator_vertices(g) == _separator_vertices_brute(suppressed(g))
