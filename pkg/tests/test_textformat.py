import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from facecover import Instance, MultiGraph
from facecover.textformat import FormatError, format_instance, parse_instance, relabeled


def test_parse(instance_text):
    inst = parse_instance(instance_text)
    assert inst.k == 1
    assert len(inst.graph.vertices) == 6
    assert len(inst.graph.edges) == 6
    assert inst.graph.terminals == set(range(1, 7))


def test_isolated_vertices_survive():
    inst = parse_instance("p facecover 4 1 1 2\ne 1 2\nt 4\n")
    assert inst.graph.vertices == {1, 2, 3, 4}


@pytest.mark.parametrize("text", [
    "",
    "e 1 2\n",
    "p facecover 2 1 0\ne 1 2\n",
    "p facecover 2 2 0 1\ne 1 2\n",
    "p facecover 2 1 0 1\ne 2 1\n",
    "p facecover 3 2 0 1\ne 1 2\ne 1 2\n",
    "p facecover 2 1 1 1\ne 1 2\nt 3\n",
    "p facecover 2 1 0 1\ne 1 x\n",
    "p facecover 2 1 0 1\ne 1 2\nq 1\n",
    "p othername 2 1 0 1\ne 1 2\n",
])
def test_malformed(text):
    with pytest.raises(FormatError):
        parse_instance(text)


def test_relabel_compacts_ids():
    g = MultiGraph.from_edges([(10, 20), (20, 35)], terminals=[35])
    inst, ids = relabeled(Instance(g, 3))
    assert sorted(inst.graph.vertices) == [1, 2, 3]
    assert inst.graph.terminals == {ids[35]}
    format_instance(inst)


@st.composite
def simple_instances(draw):
    n = draw(st.integers(1, 9))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    edges = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    terms = draw(st.sets(st.integers(1, n)))
    k = draw(st.integers(0, 5))
    return Instance(MultiGraph.from_edges(edges, terminals=terms, vertices=range(1, n + 1)), k)


@settings(max_examples=150, deadline=None)
@given(simple_instances())
def test_round_trip(inst):
    text = format_instance(inst, ["generated"])
    back = parse_instance(text)
    assert back.k == inst.k
    assert back.graph.vertices == inst.graph.vertices
    assert back.graph.terminals == inst.graph.terminals
    norm = lambda g: sorted(tuple(sorted(p)) for p in g.edges.values())  # noqa: E731
    assert norm(back.graph) == norm(inst.graph)
    assert format_instance(back, ["generated"]) == text
