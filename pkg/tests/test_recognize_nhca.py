import pytest
from hypothesis import given

from carc.arc_model import CircularArcModel, intersection_graph
from carc.certificates import (Forbidden, NonNHCA, Positive, ThreeCover, TwoCover, verify_cover,
                               verify_forbidden, verify_forbidden_graph)
from carc.generators import (FamilySpec, ci_model, hole_graph, k13_graph, named_model, path_graph,
                             rising_sun_graph, sun3_graph, tent_graph, umbrella_graph, wheel_graph)
from carc.oracles import all_models, classify, cover_verdict, find_induced
from carc.recognize_nhca import (authenticate_nhca, check_local_interval, chordal_cliques, compute_next,
                                 recognize_interval, recognize_nhca)

from conftest import models

M = CircularArcModel.parse


def _next_by_definition(m):
    out = []
    for a in range(m.n):
        ta = m.pos_t[a]
        crossers = [b for b in range(m.n) if m.contains_position(b, ta)]
        out.append(max(crossers, key=lambda b: (m.pos_t[b] - ta) % m.size) if crossers else None)
    return tuple(out)


def test_next_examples():
    assert compute_next(M("s0 t0 s1 t1")) == (None, None)
    assert compute_next(M("s0 s1 t0 t1")) == (1, None)
    assert compute_next(ci_model(3, 1))[:3] == (1, 2, 0)


@given(models(20))
def test_next_matches_definition(m):
    assert compute_next(m) == _next_by_definition(m)


@pytest.mark.parametrize("n", range(0, 6))
def test_authenticate_exhaustive(n):
    for m in all_models(n):
        cert = authenticate_nhca(m)
        expect = cover_verdict(m)
        got = "ok" if cert is None else ("two" if isinstance(cert, TwoCover) else "three")
        assert got == expect
        if cert is not None:
            assert verify_cover(m, cert)
        assert check_local_interval(m) == (cert is None)


def test_authenticate_examples():
    assert authenticate_nhca(named_model(FamilySpec("Hole", (6,)))) is None
    assert authenticate_nhca(M("s0 s1 t0 t1")) is None
    assert authenticate_nhca(M("s0 t1 s1 t0")) == TwoCover((0, 1))
    tent = named_model(FamilySpec("Tent"))
    cert = authenticate_nhca(tent)
    outer = {v for v in range(6) if tent_graph().degree(v) == 3}
    assert isinstance(cert, ThreeCover) and set(cert.arcs) == outer


def test_local_interval_examples():
    assert not check_local_interval(named_model(FamilySpec("Wheel", (4,))))
    assert check_local_interval(M("s0 t0"))


def test_recognize_interval():
    pos = recognize_interval(path_graph(4))
    assert isinstance(pos, Positive)
    assert intersection_graph(pos.model) == path_graph(4) and classify(pos.model).interval_point
    neg = recognize_interval(hole_graph(4))
    assert neg.kind == "Hole" and sorted(neg.arcs) == [0, 1, 2, 3]
    sun = recognize_interval(sun3_graph())
    assert sun.kind == "Sun3" and verify_forbidden_graph(sun3_graph(), sun)


@pytest.mark.parametrize("graph, kind", [(sun3_graph(), "Sun3"), (tent_graph(), "Tent"),
                                         (umbrella_graph(), "Umbrella"), (rising_sun_graph(5), "RisingSun")])
def test_interval_obstruction_names(graph, kind):
    found = recognize_interval(graph)
    assert isinstance(found, Forbidden) and found.kind == kind
    assert verify_forbidden_graph(graph, found)


@given(models(9))
def test_interval_recognition_matches_oracle(m):
    g = intersection_graph(m)
    found = recognize_interval(g)
    if isinstance(found, Positive):
        assert intersection_graph(found.model) == g and classify(found.model).interval_point
        assert chordal_cliques(g) is not None
    else:
        assert verify_forbidden_graph(g, found)


@pytest.mark.parametrize("spec", [FamilySpec("Wheel", (k,)) for k in range(4, 9)]
                         + [FamilySpec("RisingSun", (k,)) for k in range(4, 9)]
                         + [FamilySpec("Sun3"), FamilySpec("Umbrella"), FamilySpec("Tent")], ids=str)
def test_forbidden_fixtures_rejected(spec):
    m = named_model(spec)
    cert = recognize_nhca(m)
    assert isinstance(cert, NonNHCA)
    assert verify_cover(m, cert.cover)
    assert verify_forbidden(m, cert.obstruction)


def test_wheel_contains_w4():
    g = intersection_graph(named_model(FamilySpec("Wheel", (4,))))
    assert find_induced(g, wheel_graph(4)) is not None


@pytest.mark.parametrize("k", range(4, 11))
def test_holes_accepted(k):
    cert = recognize_nhca(named_model(FamilySpec("Hole", (k,))))
    assert isinstance(cert, Positive) and cert.route == "authenticated"


def test_interval_graph_with_covering_model():
    # arcs 0 and 1 cover the circle; arc 2 sits where only arc 0 is
    m = M("s0 t1 s2 t2 s1 t0")
    assert isinstance(authenticate_nhca(m), TwoCover)
    cert = recognize_nhca(m)
    assert isinstance(cert, Positive) and cert.route == "interval"
    assert intersection_graph(cert.model) == path_graph(3).relabel([1, 0, 2])
    assert classify(cert.model).interval_point


def test_k13_interval_model_accepted():
    cert = recognize_nhca(named_model(FamilySpec("K13")))
    assert isinstance(cert, Positive)
    assert intersection_graph(cert.model) == k13_graph()


@given(models(9))
def test_recognize_nhca_certificates(m):
    cert = recognize_nhca(m)
    if isinstance(cert, Positive):
        r = classify(cert.model)
        assert r.normal and r.helly
        assert intersection_graph(cert.model) == intersection_graph(m)
    else:
        assert verify_cover(m, cert.cover) and verify_forbidden(m, cert.obstruction)
