from fractions import Fraction

import pytest
from hypothesis import given

from carc.arc_model import equal_models
from carc.formats import (FormatError, format_graph, format_model, format_witness, parse_graph,
                          parse_model, parse_witness)
from carc.generators import FamilySpec, named_graph, named_model
from carc.oracles import unit_realizable

from conftest import models


@given(models(20))
def test_model_round_trip(m):
    back = parse_model(format_model(m))
    assert back == m and equal_models(back, m)


def test_graph_round_trip():
    g = named_graph(FamilySpec("Wheel", (5,)))
    assert parse_graph(format_graph(g)) == g


@pytest.mark.parametrize("text, where", [
    ("2\ns0 s0 t1 t1\n", "f:2:2"),
    ("2\ns0 t0 s1\n", "f:2"),
    ("1\ns0 t3\n", "f:2:2"),
    ("2\ns0 t0 s1 x1\n", "f:2:4"),
    ("two\n", "f:1"),
    ("", "f:1"),
])
def test_model_errors_are_tagged(text, where):
    with pytest.raises(FormatError) as info:
        parse_model(text, "f")
    assert str(info.value).startswith(where + ":")


@pytest.mark.parametrize("text", ["3 1\n0 5\n", "3 2\n0 1\n1 0\n", "2 1\n1 1\n", "2 2\n0 1\n"])
def test_graph_errors(text):
    with pytest.raises(FormatError):
        parse_graph(text, "g")


def test_comments_and_layout():
    m = parse_model("# a hole\n3\ns0 t2\n s1 t0 s2 t1  # wrap\n")
    assert m.n == 3


def test_witness_round_trip():
    w = unit_realizable(named_model(FamilySpec("Hole", (5,))))
    back = parse_witness(format_witness(w))
    assert back == w
    assert all(isinstance(p, Fraction) for p in back.positions)


def test_witness_errors():
    with pytest.raises(FormatError):
        parse_witness("{not json")
    with pytest.raises(FormatError):
        parse_witness('{"L": "3"}')
