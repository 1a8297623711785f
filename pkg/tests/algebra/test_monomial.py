from fractions import Fraction

import pytest

from nestrad.algebra.monomial import UNIT, RadicalMonomial
from nestrad.errors import DomainError


def test_of_sorts_and_drops_zero_exponents():
    m = RadicalMonomial.of({3: "1/3", 2: "2/3", 5: 0})
    assert m.exponents == ((2, Fraction(2, 3)), (3, Fraction(1, 3)))
    assert m.primes == (2, 3)
    assert m.degrees() == {2: 3, 3: 3}
    assert str(m) == "2^(2/3) * 3^(1/3)"


def test_invalid_monomials():
    with pytest.raises(DomainError):
        RadicalMonomial.of({4: "1/2"})
    with pytest.raises(DomainError):
        RadicalMonomial.of({2: "3/2"})
    with pytest.raises(DomainError):
        RadicalMonomial(((3, Fraction(1, 2)), (2, Fraction(1, 2))))


def test_radical_form():
    assert RadicalMonomial.of({2: "1/3", 3: "1/2"}).radical_form() == (2**2 * 3**3, 6)
    assert UNIT.radical_form() == (1, 1)


def test_times_carries_whole_primes():
    a = RadicalMonomial.of({2: "2/3"})
    carry, m = a.times(a)
    assert carry == 2
    assert m == RadicalMonomial.of({2: "1/3"})

    carry, m = RadicalMonomial.of({2: "1/2"}).times(RadicalMonomial.of({2: "1/2"}))
    assert (carry, m) == (2, UNIT)

    carry, m = RadicalMonomial.of({2: "1/3"}).times(RadicalMonomial.of({3: "1/3"}))
    assert (carry, m) == (1, RadicalMonomial.of({2: "1/3", 3: "1/3"}))


def test_inverse():
    coefficient, m = RadicalMonomial.of({2: "1/3"}).inverse()
    assert coefficient == Fraction(1, 2)
    assert m == RadicalMonomial.of({2: "2/3"})
    assert UNIT.inverse() == (Fraction(1), UNIT)


def test_sort_key_puts_unit_first():
    monomials = [
        RadicalMonomial.of({2: "1/3", 3: "1/3"}),
        RadicalMonomial.of({3: "1/3"}),
        UNIT,
        RadicalMonomial.of({2: "2/3"}),
        RadicalMonomial.of({2: "1/3"}),
    ]
    assert sorted(monomials, key=lambda m: m.sort_key) == [
        UNIT,
        RadicalMonomial.of({2: "1/3"}),
        RadicalMonomial.of({2: "2/3"}),
        RadicalMonomial.of({3: "1/3"}),
        RadicalMonomial.of({2: "1/3", 3: "1/3"}),
    ]
