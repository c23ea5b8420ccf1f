import pytest
from hypothesis import given

from carc.arc_model import CircularArcModel, intersection_graph
from carc.certificates import Positive
from carc.generators import (FamilySpec, hole_graph, k13_graph, named_model, path_graph, random_model,
                             rising_sun_graph, sun3_graph, tent_graph, umbrella_graph, wheel_graph)
from carc.oracles import classify
from carc.orientations import (Enumeration, OrientedGraph, find_enumeration, model_from_enumeration,
                               orient_from_model, scope, scope_range, verify_enumeration)
from carc.recognize_nhca import recognize_nhca

from conftest import models, proper_models

M = CircularArcModel.parse


def test_oriented_graph_checks():
    with pytest.raises(ValueError):
        OrientedGraph.from_arcs(2, [(0, 1), (1, 0)])
    with pytest.raises(ValueError):
        OrientedGraph.from_arcs(2, [(0, 0)])
    with pytest.raises(ValueError):
        Enumeration((0,), "Sideways")
    d = OrientedGraph.from_arcs(3, [(0, 1), (1, 2)])
    assert d.inn == (frozenset(), frozenset({0}), frozenset({1}))
    assert d.underlying() == path_graph(3)


def test_out_straight_interval_orientation():
    # a path oriented left to right, enumerated left to right
    d = OrientedGraph.from_arcs(6, [(i, i + 1) for i in range(5)])
    assert verify_enumeration(d, Enumeration(tuple(range(6)), "OutStraight"))
    assert verify_enumeration(d, Enumeration(tuple(range(6)), "Straight"))
    assert not verify_enumeration(d, Enumeration((1, 0, 2, 3, 4, 5), "OutStraight"))


def test_wheel_out_round_but_not_locally():
    found = find_enumeration(wheel_graph(4), "OutRound")
    assert found is not None
    d, e = found
    assert verify_enumeration(d, e)
    assert not verify_enumeration(d, Enumeration(e.order, "LocallyOutStraight"))
    assert find_enumeration(wheel_graph(4), "LocallyOutStraight") is None


def test_scope_examples():
    d = OrientedGraph.from_arcs(1, [])
    assert scope(d, Enumeration((0,), "OutRound"), 0) == (0, 0)
    d, e = find_enumeration(wheel_graph(4), "OutRound")
    hub = 4
    assert set(scope_range(d, e, hub)) == set(range(5))
    # scope of a hole in a locally out-straight enumeration of C6 misses nothing it needs
    d, e = orient_from_model(named_model(FamilySpec("Hole", (6,))))
    for v in range(6):
        part = scope_range(d, e, v)
        assert v in part and set(d.out[v]) | set(d.inn[v]) <= set(part)


def test_undefined_scope():
    # 1 -> 0 reaches back three steps and 0 -> 2 forward two: they overlap
    d = OrientedGraph.from_arcs(4, [(1, 0), (0, 2)])
    e = Enumeration((0, 1, 2, 3), "LocallyOutStraight")
    assert scope(d, e, 0) is None and scope_range(d, e, 0) is None
    assert not verify_enumeration(d, e)


@given(models(10))
def test_scope_defined_on_out_round(m):
    # an in-neighbor never sits inside the out-range, so the scope never wraps
    if not _normal(m):
        return
    d, e = orient_from_model(m)
    assert all(v in scope_range(d, e, v) for v in range(m.n))


def test_orient_examples():
    d, e = orient_from_model(named_model(FamilySpec("Hole", (5,))))
    assert verify_enumeration(d, e)
    assert verify_enumeration(d, Enumeration(e.order, "LocallyOutStraight"))
    tent = named_model(FamilySpec("Tent"))
    d, e = orient_from_model(tent)
    assert verify_enumeration(d, e)
    assert not verify_enumeration(d, Enumeration(e.order, "LocallyOutStraight"))
    with pytest.raises(ValueError):
        orient_from_model(M("s0 t1 s1 t0"))
    with pytest.raises(ValueError):
        orient_from_model(M("s0 s1 t1 t0"), "Round")


def test_model_from_c4():
    d = OrientedGraph.from_arcs(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    m = model_from_enumeration(d, Enumeration((0, 1, 2, 3), "OutRound"))
    assert intersection_graph(m) == hole_graph(4) and classify(m).normal
    with pytest.raises(ValueError):
        model_from_enumeration(d, Enumeration((0, 2, 1, 3), "OutRound"))


def _normal(m):
    return classify(m).two_cover is None if m.n <= 12 else True


@given(models(12))
def test_round_trip(m):
    if not _normal(m):
        return
    d, e = orient_from_model(m)
    assert verify_enumeration(d, e)
    back = model_from_enumeration(d, e)
    assert intersection_graph(back) == intersection_graph(m)
    assert classify(back).normal
    assert orient_from_model(back) == (d, e)


@given(models(10))
def test_nhca_models_are_locally_out_straight(m):
    if not classify(m).nhca:
        return
    d, e = orient_from_model(m)
    assert verify_enumeration(d, Enumeration(e.order, "LocallyOutStraight"))


@given(proper_models(10))
def test_phca_models_are_locally_straight(m):
    r = classify(m)
    if not (r.helly and r.normal):
        return
    d, e = orient_from_model(m, "Round")
    assert verify_enumeration(d, e)
    assert verify_enumeration(d, Enumeration(e.order, "LocallyStraight"))


@pytest.mark.parametrize("graph", [wheel_graph(4), sun3_graph(), umbrella_graph(), rising_sun_graph(4),
                                   tent_graph()], ids=["W4", "Sun3", "Umbrella", "RisingSun4", "Tent"])
def test_forbidden_not_locally_out_straight(graph):
    assert find_enumeration(graph, "LocallyOutStraight") is None


def test_k13_has_no_round_orientation():
    assert find_enumeration(k13_graph(), "Round") is None
    assert find_enumeration(k13_graph(), "OutRound") is not None


def test_search_limit():
    with pytest.raises(ValueError):
        find_enumeration(hole_graph(8), "OutRound")
    with pytest.raises(ValueError):
        find_enumeration(hole_graph(4), "Diagonal")


def test_locally_out_straight_small_graphs():
    for seed in range(60):
        m = random_model(5, seed)
        g = intersection_graph(m)
        found = find_enumeration(g, "LocallyOutStraight")
        if classify(m).helly:
            assert (found is not None) == isinstance(recognize_nhca(m), Positive)
        if found is not None:
            d, e = found
            assert d.underlying() == g and verify_enumeration(d, e)
