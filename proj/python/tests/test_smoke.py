from fractions import Fraction
from pathlib import Path

import pytest

import agrolattice as al

TOY = Path(__file__).resolve().parents[2] / "data" / "toy.wide.csv"


@pytest.fixture(scope="module")
def toy():
    return al.Cube.load(str(TOY))


def tiny():
    return al.Cube(["A", "B"], ["x", "y"], ["t1"], [("A", "x", "t1"), ("A", "y", "t1"), ("B", "y", "t1")])


def test_tiny_triples_and_lattice():
    c = tiny()
    assert al.mine_triples(c) == [(["A"], ["x", "y"], ["t1"]), (["A", "B"], ["y"], ["t1"])]
    lat = al.build_lattice(c)
    assert lat["edges"] == [(0, 1)]
    assert lat["top"] is None
    assert "n0 -> n1" in al.lattice_dot(c)


def test_toy_matches_oracle(toy):
    assert len(toy) == 149
    triples = al.mine_triples(toy)
    assert triples == al.oracle_triples(toy)
    assert triples == al.mine_triples(toy, orientation="by_dimension")
    assert (["L1"], ["J2", "J3", "J4", "J5"], ["T2", "T4"]) in triples
    assert al.orientations_isomorphic(toy)


def test_rule_ratios(toy):
    rules = {(tuple(r.antecedent), tuple(r.consequent), tuple(r.timestamps)): r for r in al.mine_rules(toy)}
    r = rules[(("J2",), ("J4",), ("T3",))]
    assert r.support == (6, 10)
    assert r.confidence == (6, 8)
    assert r.confidence_value == Fraction(3, 4)
    by_dim = {(tuple(x.antecedent), tuple(x.consequent), tuple(x.timestamps)): x for x in al.mine_rules(toy, denominator="dimensions")}
    assert by_dim[(("J2",), ("J4",), ("T3",))].support == (6, 6)
    kept = al.mine_rules(toy, "0.7", "0.8")
    assert [(x.antecedent, x.consequent) for x in kept] == [(["J4"], ["J5"]), (["J5"], ["J4"])]


def test_conformance(toy):
    report = al.conformance(toy)
    assert report["triples"]["mined"] == 159
    assert report["triples"]["reference_count"] == 76


def test_round_trip_and_errors(toy):
    back = al.Cube.parse(toy.export("cube-json"), "cube-json")
    assert al.mine_triples(back) == al.mine_triples(toy)
    with pytest.raises(al.UnknownLabel):
        al.Cube(["A"], ["x"], ["t"], [("Z", "x", "t")])
    with pytest.raises(al.ParseError):
        al.Cube.parse("location,timestamp,x\nA,t1,maybe\n")
    with pytest.raises(al.AgroError):
        al.mine_rules(toy, denominator="cells")
