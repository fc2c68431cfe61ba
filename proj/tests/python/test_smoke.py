"""Smoke tests for the Python bindings."""

import json

import pytest
import weylhom


def test_quantum_char():
    assert weylhom.quantum_char("cyclotomic,e=4") == 4
    assert weylhom.quantum_char("prime,p=3,q=2") == 2
    assert weylhom.quantum_char("prime,p=7,q=2") == 3


def test_gauss_values():
    assert weylhom.gauss(2, 1, "cyclotomic,e=2") == "0"
    assert weylhom.gauss(5, 2, "cyclotomic,e=3") == "1"
    assert weylhom.gauss_poly(4, 2) == "q^4+q^3+2*q^2+q+1"
    assert weylhom.quantum_int(3, "cyclotomic,e=7") == "q^2+q+1"
    assert weylhom.quantum_int(3, "cyclotomic,e=4") == "q"


def test_dominance():
    assert weylhom.dominates([7, 5, 3], [5, 5, 3, 1, 1])
    assert not weylhom.dominates([5, 5, 3, 1, 1], [7, 5, 3])


def test_worked_example_dimension():
    assert weylhom.hom_dim([5, 5, 3, 1, 1], [7, 5, 3], "cyclotomic,e=2") == 2
    assert weylhom.hom_dim([5, 5, 3, 1, 1], [7, 5, 3], "prime,p=3,q=2") == 2
    kernel = json.loads(weylhom.hom_kernel([5, 5, 3, 1, 1], [7, 5, 3]))
    assert kernel["dimension"] == 2
    assert len(kernel["index"]) == 15
    assert len(kernel["basis"]) == 2


def test_trivial_dimensions():
    assert weylhom.hom_dim([2], [2]) == 1
    assert weylhom.hom_dim([3, 1], [2, 2]) == 0


def test_straighten_and_normalize():
    out = json.loads(
        weylhom.straighten("1^5 2 3 / 2^4 3 / 2 4 5", 2, 2, "cyclotomic,e=2")
    )
    assert out["terms"] == [{"coeff": "-1", "tableau": "1^5 2 3 / 2^5 / 3 4 5"}]

    element = json.dumps(
        {
            "shape": [3, 3],
            "type": [2, 1, 3],
            "terms": [{"tableau": "1^2 3 / 2 3^2", "coeff": "1"}],
        }
    )
    out = json.loads(weylhom.normalize(element, "cyclotomic,e=3"))
    assert out["terms"] == [{"coeff": "-1", "tableau": "1^2 2 / 3^3"}]

    with pytest.raises(weylhom.BudgetExceededError):
        weylhom.normalize(element, "cyclotomic,e=3", budget=1)


def test_family():
    mu, lam = weylhom.family_partitions(4, 4, 3, 2)
    assert mu == [5, 5, 3, 1, 1]
    assert lam == [7, 5, 3]
    assert weylhom.theta(4, 4, 3, 2) == "1^5 2 3 / 2^4 3 / 3 4 5"

    phi = json.loads(weylhom.phi(4, 4, 3, 2))
    assert len(phi["terms"]) == 6

    report = json.loads(weylhom.verify_family(4, 4, 3, 2))
    assert report["theta"]["member"] is True
    assert report["phi"]["member"] is True

    membership = json.loads(
        weylhom.verify_membership(
            weylhom.phi(4, 4, 3, 2), mu, lam, "cyclotomic,e=2"
        )
    )
    assert membership["member"] is True
    assert all(check["vanishes"] for check in membership["checks"])


def test_glue():
    assert weylhom.glue([1], [1]) == ([2, 1], [2, 1])
    alpha, beta = weylhom.glue([5, 5, 3, 1, 1], [7, 5, 3])
    assert alpha == [12, 12, 10, 8, 8, 5, 5, 3, 1, 1]
    assert beta == [14, 12, 10, 7, 7, 7, 5, 3]
    with pytest.raises(ValueError):
        weylhom.glue([2, 1], [1, 1, 1])


def test_parse_errors():
    with pytest.raises(ValueError):
        weylhom.hom_dim([3, 1], [2, 2], "cyclotomic,e=1")
    with pytest.raises(ValueError):
        weylhom.straighten("1 /", 1, 1)
