import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from facecover.decomposition import spr_tree
from facecover.embedding import planar_embedding
from facecover.harness import gen_biconnected, small_graphs
from facecover.kernelize.parts import C4, EDGE, P3, TRIANGLE, W4, build_part, gadget_profile
from facecover.multigraph import IdSource, MultiGraph
from facecover.oracle import (
    INF,
    classify_exact,
    cover_faces,
    embedded_fcn,
    fcn_exact,
    fcn_profile_exact,
    min_set_cover,
    verify_nice_kernel,
)

from conftest import complete, cycle


def test_set_cover_basics():
    assert min_set_cover(0b111, [0b011, 0b110, 0b100]) == (2, (0, 1))
    assert min_set_cover(0b1000, [0b011])[0] == INF
    assert min_set_cover(0, [])[0] == 0


def test_cover_faces_with_external_count():
    faces = [frozenset({1, 2}), frozenset({2, 3}), frozenset({1, 2, 3})]
    assert cover_faces(faces, {1, 3}).size == 1
    assert cover_faces(faces, {1, 3}, external=(2, 0), exactly=0).size == INF
    assert cover_faces(faces, {1, 3}, external=(2, 0), exactly=1).size == 1
    r = cover_faces(faces, {1, 3}, external=(0, 1), exactly=2)
    assert r.size == 2 and r.external_used == 2


def test_cycle_needs_one_face():
    for n in range(3, 8):
        assert fcn_exact(cycle(n)) == 1


def test_k4_all_terminals_needs_two():
    assert fcn_exact(complete(4, range(1, 5))) == 2


def test_k4_minus_edge_needs_one():
    g = complete(4, range(1, 5))
    g.remove_edge(next(e for e, p in g.edges.items() if set(p) == {1, 2}))
    assert fcn_exact(g) == 1


def test_no_terminals_needs_nothing():
    assert fcn_exact(complete(4)) == 0


def test_disconnected_parts_nest_into_one_face():
    g = MultiGraph.from_edges([(1, 2), (2, 3), (1, 3), (4, 5)], terminals=[1, 4])
    assert fcn_exact(g) == 1
    pairs = list(complete(4).edges.values())
    two = MultiGraph.from_edges(pairs + [(u + 4, v + 4) for u, v in pairs], terminals=range(1, 9))
    assert fcn_exact(two) == 3


def test_embedded_fcn_on_fixed_rotation():
    g = complete(4, range(1, 5))
    assert embedded_fcn(g, planar_embedding(g)).size == 2


def test_enumerators_agree_on_small_graphs():
    for g in small_graphs(6):
        g.terminals = set(list(sorted(g.vertices))[::2])
        if len(g.vertices) < 3:
            continue
        a = fcn_exact(g, method="rotation")
        b = fcn_exact(g, method="spr")
        assert a == b, sorted(g.edges.values())


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6), st.integers(3, 9), st.sets(st.integers(1, 9)))
def test_enumerators_agree_on_random_blocks(seed, n, terms):
    g = gen_biconnected(seed, n, 0.6)
    g.terminals = {v for v in terms if v in g.vertices}
    assert fcn_exact(g, method="rotation") == fcn_exact(g, method="spr")


def test_terminal_subdivided_edge_profile():
    g = build_part(P3, 1, 2, 1, IdSource(3, 2))
    p = fcn_profile_exact(g, (1, 2), 1, k=3)
    assert p.f1 == 1 and p.f0 == INF


def test_no_terminals_profile():
    g = build_part(W4, 1, 2, 1, IdSource(3, 2))
    g.terminals = set()
    p = fcn_profile_exact(g, (1, 2), 1, k=3)
    assert set(p.f0_minus.values()) == {0} and p.f0 == 0


def test_saturation():
    g = complete(4, range(1, 5))
    e = min(g.edges)
    p = fcn_profile_exact(g, g.endpoints(e), e, k=1)
    assert p.f0 == 2  # stored as k + 1
    assert p.to_json()["f0"] == "above"


# oracle profiles of the gadgets with unmarked corners, k = 3
GADGET_TABLE = {
    EDGE: (0, 1, 2),
    P3: (INF, 1, 2),
    TRIANGLE: (1, 1, 2),
    W4: (2, 2, 2),
    C4: (1, 2, 2),
}


@pytest.mark.parametrize("kind", sorted(GADGET_TABLE))
def test_gadget_profiles(kind):
    p = gadget_profile(kind, 3, 1, 2, set())
    assert (p.f0, p.f1, p.f2) == GADGET_TABLE[kind]


def test_marked_corner_blocks_internal_cover():
    p = gadget_profile(EDGE, 3, 1, 2, {1})
    assert p.f0 == INF
    assert p.f0_minus[frozenset({1})] == 0


def test_w4_gadget_is_semi_problematic():
    g = build_part(W4, 1, 2, 1, IdSource(3, 2))
    facts = classify_exact(g, (1, 2), 1)
    assert facts.efc and facts.fcn_one and not facts.unproblematic
    assert facts.tag() == "SemiProblematic"


def test_identity_kernel_verifies():
    g = gen_biconnected(5, 7, 0.5)
    g.terminals = {1, 3, 5}
    e = min(g.edges)
    v = verify_nice_kernel(g, g.endpoints(e), e, g.copy(), 3)
    assert v.ok


def test_triangle_for_p3_fails_verification():
    # a terminal-subdivided edge has no internal face, a triangle does
    g = build_part(P3, 1, 2, 1, IdSource(3, 2))
    t = build_part(TRIANGLE, 1, 2, 1, IdSource(3, 2))
    assert not verify_nice_kernel(g, (1, 2), 1, t, 3).k2


def test_ratio_is_reported():
    g = build_part(C4, 1, 2, 1, IdSource(3, 2))
    v = verify_nice_kernel(g, (1, 2), 1, g.copy(), 3)
    # the f2 cover uses both external faces and nothing else
    assert v.internal_faces == 0 and v.ratio == 0
    h = complete(4, range(1, 5))
    e = min(h.edges)
    v = verify_nice_kernel(h, h.endpoints(e), e, h.copy(), 3)
    assert math.isclose(v.ratio, v.internal_faces / 4 ** (1 / 3))
