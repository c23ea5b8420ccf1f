import pytest
from hypothesis import given

from carc.arc_model import (CircularArcModel, EMPTY, canonical_form, complement_model, duplicate_arc,
                            equal_models, extreme_sequences, induced_submodel, intersection_graph,
                            is_proper, is_twin_consecutive, reverse_model, s, t, universal_arcs)
from carc.generators import FamilySpec, ci_model, named_model, sun3_graph, wheel_graph
from carc.oracles import classify, isomorphic

from conftest import models, proper_models

M = CircularArcModel.parse


def test_rejects_bad_orders():
    with pytest.raises(ValueError):
        M("s0 s0 t0 t0")
    with pytest.raises(ValueError):
        M("s0 t1")


def test_intersection_graph_small():
    assert intersection_graph(M("s0 t0 s1 t1")).edges() == []
    assert intersection_graph(M("s0 s1 t1 t0")).edges() == [(0, 1)]


def test_ci31_is_sun():
    assert isomorphic(intersection_graph(ci_model(3, 1)), sun3_graph())


def test_induced_submodel():
    m = ci_model(3, 1)
    same, keep = induced_submodel(m, range(m.n))
    assert same == m and keep == tuple(range(6))
    assert induced_submodel(m, [])[0] == EMPTY
    tri, keep = induced_submodel(m, [0, 1, 2])
    assert keep == (0, 1, 2)
    assert intersection_graph(tri).is_complete()


def test_complement():
    m = M("s0 t0 s1 t1")
    assert complement_model(complement_model(m)) == m
    c = complement_model(m)
    assert intersection_graph(c).edges() == [(0, 1)]
    assert classify(c).two_cover == (0, 1)


def test_duplicate_single_arc():
    d = duplicate_arc(M("s0 t0"), 0)
    assert d.n == 2 and intersection_graph(d).edges() == [(0, 1)]


def test_duplicate_wheel_hub():
    m = named_model(FamilySpec("Wheel", (4,)))
    d = duplicate_arc(m, 4)
    g = intersection_graph(d)
    assert g.closed(4) == g.closed(5)
    assert intersection_graph(induced_submodel(d, range(5))[0]) == wheel_graph(4)


@given(models(10))
def test_duplicate_keeps_classes(m):
    r = classify(m)
    for a in (0, m.n - 1):
        d = duplicate_arc(m, a)
        rd = classify(d)
        assert (rd.proper, rd.normal, rd.helly, rd.interval_point) == (r.proper, r.normal, r.helly, r.interval_point)
        assert is_twin_consecutive(d) or not is_twin_consecutive(m)


def test_reverse():
    m = ci_model(3, 1)
    assert equal_models(reverse_model(reverse_model(m)), m)
    assert intersection_graph(reverse_model(m)) == intersection_graph(m)
    # the CI(3,1) model is mirror-symmetric once arcs may be renamed
    assert equal_models(m, reverse_model(m))
    chiral = M("s0 s1 s2 t0 t2 t1")
    assert not equal_models(chiral, reverse_model(chiral))
    assert equal_models(M("s0 t0"), reverse_model(M("s0 t0")))


@given(models(10))
def test_equal_models_rotation_and_relabel(m):
    assert equal_models(m, m.rotate(3))
    perm = list(range(m.n))[::-1]
    assert equal_models(m, m.relabel(perm))
    assert canonical_form(m) == canonical_form(m.rotate(1).relabel(perm))
    assert intersection_graph(reverse_model(m)) == intersection_graph(m)


def test_equal_models_sizes():
    assert not equal_models(M("s0 t0"), M("s0 t0 s1 t1"))


def test_universal_arcs():
    assert universal_arcs(M("s0 t0 s1 t1")) == set()
    assert universal_arcs(M("s0 s1 t0 t1")) == {0, 1}


@given(proper_models(15))
def test_universal_arcs_are_universal_vertices(m):
    g = intersection_graph(m)
    assert universal_arcs(m) == {v for v in range(g.n) if len(g.closed(v)) == g.n}


def test_extreme_sequences():
    runs = extreme_sequences(M("s0 s1 t0 t1"))
    assert [r.extremes for r in runs] == [(s(0), s(1)), (t(0), t(1))]
    assert len(extreme_sequences(M("s0 t0 s1 t1"))) == 4


@given(models(12))
def test_extreme_sequences_partition(m):
    runs = extreme_sequences(m)
    flat = [e for r in runs for e in r.extremes]
    assert sorted(flat) == sorted(m.order)
    assert all(a.begin != b.begin for a, b in zip(runs, runs[1:]))


@given(proper_models(12))
def test_is_proper_matches_oracle(m):
    assert is_proper(m) and classify(m).proper


@given(models(8))
def test_is_proper_any(m):
    assert is_proper(m) == classify(m).proper


@given(proper_models(12))
def test_proper_single_universal_is_twin_consecutive(m):
    if len(universal_arcs(m)) <= 1:
        assert is_twin_consecutive(m)
