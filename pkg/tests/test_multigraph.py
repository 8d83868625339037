import pytest

from facecover import Instance, MultiGraph
from facecover.multigraph import REAL, VIRTUAL, StructuralError, contract_edge, subdivide_edge

from conftest import complete, cycle


def test_edges_keep_ids_and_kinds():
    g = MultiGraph.from_edges([(1, 2), (2, 3)])
    e = g.add_edge(1, 3, VIRTUAL)
    assert g.kinds[e] == VIRTUAL
    assert g.endpoints(e) == (1, 3)
    assert g.other(e, 3) == 1
    assert g.degree(1) == 2
    assert set(g.virtual_edges()) == {e}


def test_parallel_edges_are_allowed_but_not_simple():
    g = MultiGraph.from_edges([(1, 2)])
    g.add_edge(1, 2, REAL)
    assert len(g.edges) == 2
    assert not g.is_simple()


def test_copies_share_the_id_source():
    g = cycle(4)
    h = g.copy()
    a = g.add_vertex()
    b = h.add_vertex()
    assert a != b


def test_remove_vertex_drops_incident_edges():
    g = complete(4)
    g.remove_vertex(1)
    assert len(g.edges) == 3
    assert g.vertices == {2, 3, 4}


def test_components():
    g = MultiGraph.from_edges([(1, 2), (3, 4)], vertices=range(1, 6))
    assert sorted(sorted(c) for c in g.components()) == [[1, 2], [3, 4], [5]]


def test_subdivide_keeps_the_edge_id_on_the_first_segment():
    g = MultiGraph.from_edges([(1, 2)])
    (e,) = g.edges
    h = subdivide_edge(g, e, make_terminal=True)
    assert len(h.vertices) == 3
    assert 1 in h.endpoints(e)
    (x,) = h.vertices - {1, 2}
    assert x in h.terminals


def test_contract_merges_endpoints():
    g = cycle(4)
    e = next(iter(g.edges))
    h = contract_edge(g, e)
    assert len(h.vertices) == 3


def test_instance_validation():
    Instance(cycle(5), 1).validate()
    with pytest.raises(StructuralError):
        Instance(cycle(3), -1).validate()
    with pytest.raises(StructuralError):
        Instance(complete(5), 2).validate()
    g = MultiGraph.from_edges([(1, 2)])
    g.add_edge(1, 2)
    with pytest.raises(StructuralError):
        Instance(g, 1).validate()
