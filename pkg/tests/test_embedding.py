import math

import pytest

from facecover.embedding import (
    BudgetExceeded,
    enumerate_planar_rotations,
    euler_ok,
    is_planar,
    planar_embedding,
    rotation_count,
    trace_faces,
)
from facecover.multigraph import MultiGraph

from conftest import complete, cycle, wheel


def test_cycle_has_two_faces():
    g = cycle(5)
    fs = trace_faces(g, planar_embedding(g))
    assert len(fs.faces) == 2
    assert all(f.vertices == g.vertices for f in fs.faces)


def test_k4_faces_are_triangles():
    g = complete(4)
    fs = trace_faces(g, planar_embedding(g))
    assert euler_ok(g, fs)
    assert sorted(len(f.darts) for f in fs.faces) == [3, 3, 3, 3]


def test_every_edge_borders_two_face_sides():
    g = wheel(5)
    fs = trace_faces(g, planar_embedding(g))
    for e in g.edges:
        assert len(fs.faces_of_edge(g, e)) == 2


def test_k5_is_not_planar():
    g = complete(5)
    assert not is_planar(g)
    assert planar_embedding(g) is None


def test_multigraph_with_parallel_edges_embeds():
    g = MultiGraph.from_edges([(1, 2), (1, 2), (2, 3), (1, 3)])
    rot = planar_embedding(g)
    assert euler_ok(g, trace_faces(g, rot))


def test_rotation_count():
    g = complete(4)
    assert rotation_count(g) == math.prod(math.factorial(g.degree(v) - 1) for v in g.vertices)


def test_k4_has_two_planar_rotations():
    # unique embedding up to mirror image
    assert len(list(enumerate_planar_rotations(complete(4)))) == 2


def test_enumeration_budget():
    with pytest.raises(BudgetExceeded):
        list(enumerate_planar_rotations(complete(4), slot_budget=3))
