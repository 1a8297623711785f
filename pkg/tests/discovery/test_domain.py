from fractions import Fraction

import pytest

from nestrad.discovery.domain import SearchDomain, height
from nestrad.discovery.parallel import chunked
from nestrad.errors import DomainError


def test_height():
    assert height(Fraction(0)) == 1
    assert height(Fraction(-3, 2)) == 3
    assert height(Fraction(1, 5)) == 5


def test_integers_by_height():
    d = SearchDomain.integers(2)
    assert d.values() == (-1, 0, 1, -2, 2)
    assert d.nonzero_values() == (-1, 1, -2, 2)
    assert len(d) == 5
    assert str(d) == "integers in [-2, 2]"


def test_rationals_and_multiples():
    half = Fraction(1, 2)
    assert SearchDomain.rationals(1, 2).values() == (-1, 0, 1, -half, half)
    thirds = SearchDomain.multiples(3, 3)
    assert len(thirds.nonzero_values()) == 6
    assert Fraction(1, 3) in thirds.values()
    assert Fraction(1, 2) not in thirds.values()
    assert str(thirds) == "p/3 with |p| <= 3"


def test_assignments_small_first():
    assignments = SearchDomain.integers(2).assignments(2)
    assert len(assignments) == 25
    assert assignments[0] == (-1, -1)
    assert all(max(abs(v) for v in t) <= 1 for t in assignments[:9])
    assert SearchDomain.integers(2).assignments(0) == [()]


def test_invalid_domain():
    with pytest.raises(DomainError):
        SearchDomain(-1)
    with pytest.raises(DomainError):
        SearchDomain(3, 0)


def test_chunked_keeps_order():
    parts = chunked(list(range(10)), 3)
    assert len(parts) == 3
    assert [x for part in parts for x in part] == list(range(10))
    assert chunked([], 4) == []
