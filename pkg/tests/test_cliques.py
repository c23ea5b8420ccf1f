import random
from itertools import product

import pytest
from hypothesis import given, strategies as st

from carc.arc_model import CircularArcModel, intersection_graph
from carc.cliques import (CliqueMatrix, clique_matrix, clique_segments, consecutive_order, ones_property,
                          ones_property_exhaustive, phca_via_matrix)
from carc.generators import (FamilySpec, complete_graph, hole_graph, k13_graph, named_model, sun3_graph,
                             wheel_graph)
from carc.graph import Graph
from carc.oracles import maximal_cliques
from carc.recognize_nhca import authenticate_nhca

from conftest import models

M = CircularArcModel.parse

FORBIDDEN_MATRICES = {
    "K13": [[1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1]],
    "W4": [[1, 1, 0, 0, 1], [1, 1, 1, 0, 0], [1, 0, 1, 1, 0], [1, 0, 0, 1, 1]],
    "W5": [[1, 1, 0, 0, 0, 1], [1, 1, 1, 0, 0, 0], [1, 0, 1, 1, 0, 0], [1, 0, 0, 1, 1, 0], [1, 0, 0, 0, 1, 1]],
    "S3": [[1, 0, 1, 0, 1, 0], [1, 1, 0, 0, 0, 1], [1, 1, 1, 0, 0, 0], [0, 1, 1, 1, 0, 0]],
}


def test_segments_examples():
    assert clique_segments(M("s0 t0")) == [(0, frozenset({0}))]
    segs = clique_segments(named_model(FamilySpec("Hole", (5,))))
    assert len(segs) == 5 and all(len(a) == 2 for _, a in segs)
    with pytest.raises(ValueError):
        clique_segments(named_model(FamilySpec("Wheel", (4,))))


@given(models(12))
def test_segments_are_the_cliques(m):
    if authenticate_nhca(m) is not None:
        return
    got = sorted(tuple(sorted(a)) for _, a in clique_segments(m))
    assert got == sorted(maximal_cliques(intersection_graph(m)))


def _same_up_to_permutation(rows_a, rows_b):
    from carc.oracles import isomorphic

    # bipartite incidence graphs with a marker telling rows from columns
    def incidence(rows):
        k, n = len(rows), len(rows[0])
        edges = [(i, k + j) for i in range(k) for j in range(n) if rows[i][j]]
        # hang a pendant path of length two on each row vertex
        extra = k + n
        for i in range(k):
            edges += [(i, extra), (extra, extra + 1)]
            extra += 2
        return Graph.from_edges(extra, edges)

    return len(rows_a) == len(rows_b) and isomorphic(incidence(rows_a), incidence(rows_b))


@pytest.mark.parametrize("name, graph", [("K13", k13_graph()), ("W4", wheel_graph(4)),
                                         ("W5", wheel_graph(5)), ("S3", sun3_graph())])
def test_forbidden_clique_matrices(name, graph):
    q = clique_matrix(graph)
    assert _same_up_to_permutation(q.rows, FORBIDDEN_MATRICES[name])
    assert ones_property(FORBIDDEN_MATRICES[name], "rows", "circular") is None
    assert ones_property_exhaustive(FORBIDDEN_MATRICES[name], "rows", "circular") is None
    assert not phca_via_matrix(graph)


def test_clique_matrix_basics():
    assert clique_matrix(complete_graph(4)).rows == ((1, 1, 1, 1),)
    assert isinstance(clique_matrix(hole_graph(5)), CliqueMatrix)
    assert str(clique_matrix(complete_graph(2))) == "11"


def test_identity_and_holes():
    ident = [[int(i == j) for j in range(5)] for i in range(5)]
    for axis, mode in product(["rows", "columns"], ["consecutive", "circular"]):
        assert ones_property(ident, axis, mode) is not None
    assert ones_property(clique_matrix(hole_graph(6)), "columns", "circular") is not None
    assert phca_via_matrix(hole_graph(5))
    assert phca_via_matrix(Graph(1, [[]]))


def _valid(matrix, axis, mode, order):
    lines = matrix if axis == "rows" else [list(c) for c in zip(*matrix)]
    for line in lines:
        bits = [line[i] for i in order]
        if mode == "circular":
            changes = sum(bits[i] != bits[i - 1] for i in range(len(bits)))
            if changes > 2:
                return False
        else:
            ones = [i for i, b in enumerate(bits) if b]
            if ones and ones[-1] - ones[0] + 1 != len(ones):
                return False
    return True


@pytest.mark.parametrize("mode", ["consecutive", "circular"])
def test_against_exhaustive_all_small(mode):
    # every matrix with 3 rows over 4 columns
    for bits in product([0, 1], repeat=12):
        matrix = [bits[0:4], bits[4:8], bits[8:12]]
        for axis in ("rows", "columns"):
            fast = ones_property(matrix, axis, mode)
            slow = ones_property_exhaustive(matrix, axis, mode)
            assert (fast is None) == (slow is None)
            if fast is not None:
                assert _valid(matrix, axis, mode, fast)


@pytest.mark.parametrize("mode", ["consecutive", "circular"])
def test_against_exhaustive_random(mode):
    rng = random.Random(11)
    for _ in range(1500):
        cols, rows = rng.randint(1, 9), rng.randint(1, 7)
        density = rng.random()
        matrix = [[int(rng.random() < density) for _ in range(cols)] for _ in range(rows)]
        fast = ones_property(matrix, "rows", mode)
        slow = ones_property_exhaustive(matrix, "rows", mode)
        assert (fast is None) == (slow is None), matrix
        if fast is not None:
            assert _valid(matrix, "rows", mode, fast)


@given(st.lists(st.sets(st.integers(0, 7), min_size=1), max_size=8))
def test_consecutive_order_property(rows):
    order = consecutive_order(range(8), rows)
    if order is not None:
        assert sorted(order) == list(range(8))
        where = {x: i for i, x in enumerate(order)}
        for r in rows:
            spots = sorted(where[x] for x in r)
            assert spots[-1] - spots[0] == len(spots) - 1
