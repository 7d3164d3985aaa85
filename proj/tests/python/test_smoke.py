import json
from fractions import Fraction

import pytest

import tautcalc


def test_bernoulli_and_a_coeff():
    assert tautcalc.bernoulli(4) == Fraction(-1, 30)
    assert tautcalc.bernoulli(1) == Fraction(-1, 2)
    assert [tautcalc.a_coeff(m) for m in (3, 4, 5)] == [Fraction(1, 12), Fraction(1, 24), Fraction(1, 80)]
    with pytest.raises(ValueError):
        tautcalc.bernoulli(-1)
    with pytest.raises(tautcalc.DomainError):
        tautcalc.a_coeff(2)


def test_partitions():
    assert tautcalc.partitions(3) == [[3], [2, 1], [1, 1, 1]]
    assert len(tautcalc.partitions(5)) == 7


def test_canonical_class():
    assert tautcalc.ch(2, 0, degree=1, basis="lambda") == ["13*lambda - 2*delta"]
    assert tautcalc.chern(2, 1, jmax=1, basis="lambda") == ["-13*lambda - psi + 2*delta"]
    assert tautcalc.rank(2, 1) == 4


def test_degree_two():
    ch2 = tautcalc.ch(1, 1, degree=2)[1]
    assert ch2.startswith("1/3 kappa_2 + 1/4 xi_irr_*(psi_{q1} + psi_{q2})")


def test_unstable():
    with pytest.raises(ValueError, match="stability"):
        tautcalc.ch(0, 2)


def test_boundary_counts():
    assert [tautcalc.boundary_count(g, n) for g, n in ((0, 5), (0, 6), (1, 1), (2, 0))] == [10, 25, 1, 2]


def test_json_round_trip():
    for doc in tautcalc.ch(2, 1, degree=3, mode="concrete", format="json"):
        assert tautcalc.render(doc, "json") == doc
        assert json.loads(doc)["mode"] == "concrete"
    labelled = tautcalc.ch(0, labels=["a", "b", "c", "d"], degree=1, basis="lambda", format="json")[0]
    assert "psi_{a}" in tautcalc.render(labelled, "text")


def test_verify():
    results = {name: passed for name, passed, _ in tautcalc.verify()}
    assert results["theta_identity"]
    assert not results["psi_series_identity"]
    faulty = {name: passed for name, passed, _ in tautcalc.verify(inject_fault=True)}
    assert not faulty["theta_identity"]
