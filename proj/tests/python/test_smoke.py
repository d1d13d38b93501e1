from pathlib import Path

import pytest

import dtc

DATA = Path(__file__).resolve().parents[2] / "data"
TRIANGLE = [["a", "b"], ["b", "c"], ["a", "c"]]


def test_parse_and_load():
    assert dtc.parse("c a\nb c\nb a\n") == TRIANGLE[:1] + [["a", "c"], ["b", "c"]]
    assert dtc.load(DATA / "boundary-delta2.txt") == [["a", "b"], ["a", "c"], ["b", "c"]]
    with pytest.raises(dtc.ParseError):
        dtc.parse("a b\nx|y\n")


def test_boundary_triangle_invariants():
    t = dtc.tc(TRIANGLE)
    assert t["status"] == "exact"
    assert t["value"] == 2
    assert len(t["cover"]) == 3
    s = dtc.scat(TRIANGLE)
    assert s["value"] == 1
    assert len(s["cover"]) == 2
    assert dtc.verify(t)[0]
    assert dtc.verify(s)[0]


def test_core_and_product():
    c = dtc.core("a b c d")
    assert c["core"]["facets"] == [["d"]]
    assert len(c["steps"]) == 3
    p = dtc.product(TRIANGLE)
    assert len(p["product"]["facets"]) == 9


def test_checks_and_plan():
    assert dtc.is_farber(TRIANGLE)["verdict"] == "no"
    assert dtc.is_farber(TRIANGLE, [["a|a", "a|b"], ["b|b", "b|c"]])["verdict"] == "yes"
    assert dtc.is_categorical(TRIANGLE, [["a", "b"], ["b", "c"]])["verdict"] == "yes"
    plan = dtc.plan(TRIANGLE, "a", "c")
    assert plan["path"][0] == "a" and plan["path"][-1] == "c"
    assert dtc.verify(plan)[0]


def test_mutated_certificate_rejected():
    t = dtc.tc(TRIANGLE)
    step = t["cover"][0]["witness"]["steps"][0]
    step[0] = "c|b" if step[0] != "c|b" else "a|c"
    accepted, message = dtc.verify(t)
    assert not accepted
    assert message


def test_errors():
    with pytest.raises(dtc.InvalidInput):
        dtc.plan(TRIANGLE, "a", "zz")
    with pytest.raises(ValueError):
        dtc.is_categorical(TRIANGLE, [["a", "b", "c"]])
