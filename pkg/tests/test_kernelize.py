import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from facecover import Instance, MultiGraph
from facecover.decomposition import small_separators
from facecover.embedding import euler_ok, planar_embedding, trace_faces
from facecover.harness import exit_instances, gen_planar
from facecover.kernelize import canonical_no, canonical_yes, kernelize, rigidize
from facecover.multigraph import StructuralError
from facecover.oracle import fcn_exact

from conftest import complete, cycle


def answer(inst):
    return fcn_exact(inst.graph) <= inst.k


def test_canonical_instances():
    assert not answer(canonical_no())
    assert answer(canonical_yes())


def test_zero_budget_with_terminals_is_no():
    kern, rep = kernelize(Instance(cycle(4), 0))
    assert rep.decision_hint == "no"
    assert any(r.rule == "NO-zero-budget" for r in rep.rules_fired)
    assert not answer(kern)


def test_no_terminals_is_yes():
    kern, rep = kernelize(Instance(complete(4), 2))
    assert rep.decision_hint == "yes"
    assert answer(kern)


def test_cycle_shrinks_to_a_yes_kernel():
    inst = Instance(cycle(12), 1)
    kern, rep = kernelize(inst)
    assert answer(kern)
    assert len(kern.graph.vertices) <= 3


def test_k4_stays_no():
    kern, rep = kernelize(Instance(complete(4, range(1, 5)), 1))
    assert not answer(kern)


@pytest.mark.parametrize("name,inst,rule", exit_instances(), ids=[c[0] for c in exit_instances()])
def test_early_exits(name, inst, rule):
    kern, rep = kernelize(inst)
    assert rep.decision_hint == "no"
    assert rule in [r.rule for r in rep.rules_fired]
    assert fcn_exact(inst.graph) > inst.k


def test_rejects_invalid_instances():
    with pytest.raises(StructuralError):
        kernelize(Instance(complete(5, [1]), 2))


def test_report_is_json_serialisable():
    inst = gen_planar(3, 12, 0.5, 0.4, 2)
    kern, rep = kernelize(inst)
    data = json.loads(json.dumps(rep.to_json()))
    assert set(data) == {"rules_fired", "profile", "kernel_size", "decision_hint", "vertex_map"}
    assert data["decision_hint"] in ("yes", "no", "unknown")
    for a, b in rep.vertex_map.items():
        assert a in inst.graph.vertices and b in kern.graph.vertices


def test_kernel_is_a_valid_instance():
    inst = gen_planar(11, 30, 0.6, 0.3, 3)
    kern, _ = kernelize(inst)
    kern.validate()
    assert kern.k <= inst.k
    assert sorted(kern.graph.vertices) == list(range(1, len(kern.graph.vertices) + 1))


@settings(max_examples=120, deadline=None)
@given(st.integers(0, 10**6), st.integers(1, 11), st.sampled_from([0.3, 0.6, 0.9]),
       st.sampled_from([0.2, 0.5, 1.0]), st.integers(1, 3))
def test_answer_is_preserved(seed, n, density, frac, k):
    inst = gen_planar(seed, n, density, frac, k)
    kern, rep = kernelize(inst)
    assert kern.k <= inst.k
    assert answer(kern) == answer(inst)
    if rep.decision_hint != "unknown":
        assert (rep.decision_hint == "yes") == answer(inst)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10**6), st.integers(3, 9), st.sampled_from([0.3, 0.6]))
def test_rigidize_removes_small_separators(seed, n, density):
    g = gen_planar(seed, n, density, 0.0, 1).graph
    rot = planar_embedding(g)
    seps = small_separators(g)
    U = set().union(*seps) if seps else set()
    h, hrot = rigidize(g, rot, U)
    assert euler_ok(h, trace_faces(h, hrot))
    assert U <= h.vertices
    left = set().union(*small_separators(h)) if small_separators(h) else set()
    assert not (left & U)
    assert len(h.vertices) <= len(g.vertices) + 6 * len(g.edges)
