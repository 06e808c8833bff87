import pytest

import artinian

CI = "vars x,y; rels x^2,y^2;"
SQUARE = "vars x,y; rels x^2,x*y,y^2;"
R1 = "vars x,y,z; rels x^3,y^3,z^3,x*y,x*z^2;"


def test_basic_invariants():
    r = artinian.Ring.from_text(R1)
    assert r.field == "Q"
    assert r.dim == 13
    assert r.e == 3
    assert r.ring_profile()[0] == 1


def test_betti_numbers():
    assert artinian.Ring.from_text(SQUARE, field="F101").betti(4) == [1, 2, 4, 8, 16]
    assert artinian.Ring.from_text(CI, field="F101").betti(4) == [1, 2, 3, 4, 5]


def test_golod_verdicts():
    assert artinian.Ring.from_text(SQUARE).golod(8)["verdict"] == "GolodToPrecision"
    report = artinian.Ring.from_text(CI).golod()
    assert report["verdict"] == "NotGolod(3)"


def test_summands_and_decomposition():
    r = artinian.Ring.from_text(R1)
    assert not r.simple_summand(2)
    assert r.simple_summand(3)
    ci = artinian.Ring.from_text(CI, field="F101")
    report = ci.decompose(2)
    assert report["summands"] == 1
    assert report["verified"]
    assert ci.star_scan(4)["pairs"] == []
    with pytest.raises(artinian.UnsupportedField):
        artinian.Ring.from_text(CI).decompose(2)


def test_fibre_product():
    text = artinian.fibre_product("field F 101; vars x,y; rels x^2,y^2;", "field F 101; vars z,w; rels z^2,w^2;")
    r = artinian.Ring.from_text(text)
    assert r.dim == 7
    assert r.fibre_product
    assert r.summand(1, 2)["split"]


def test_reproduce_and_scan():
    assert all(o["passed"] for o in artinian.reproduce())
    config = {"field": "F101", "e": 2, "samples": 5, "seed": 3, "max_dim": 10}
    first = artinian.scan(config, jobs=2)
    assert len(first) == 5
    assert first == artinian.scan(config)


def test_parse_error():
    with pytest.raises(artinian.ParseError):
        artinian.Ring.from_text("vars x; rels x^2")
