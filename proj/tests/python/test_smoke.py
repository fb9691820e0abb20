import os

import pytest

import knottab

DATA = os.environ.get("KNOTTAB_DATA_DIR", os.path.join(os.path.dirname(__file__), "..", "..", "fixtures"))


def test_conway_closed_and_oracle():
    assert knottab.invariants("[2 2 2/2 2 2]")["conway"] == "9z^4 + 6z^2 + 1"
    assert knottab.conway_fox("[2 2 2/2 2 2]") == "9z^4 + 6z^2 + 1"


def test_bracket_agrees():
    closed = knottab.invariants("(3,-2)")["bracket"]
    assert closed == knottab.bracket_oracle("(3,-2)")


def test_span_example():
    assert knottab.invariants("(2,8)")["span"] == 10
    assert knottab.invariants("(4,4)", method="oracle")["span"] == 8
    assert knottab.compare("(2,8)", "(4,4)") == "DistinctByJones"


def test_canonical():
    assert knottab.canonical("(2,-1)") == "(3)"


def test_girth_of_reference():
    g, rep = knottab.girth(os.path.join(DATA, "rolfsen", "3_1.pd.json"))
    assert g == 2
    assert rep is not None


def test_census():
    assert knottab.census_classes(2, 10, True, True) == 15


def test_errors():
    with pytest.raises(ValueError):
        knottab.invariants("(2,")
    with pytest.raises(ValueError):
        knottab.census_classes(3, 9, False, False)
