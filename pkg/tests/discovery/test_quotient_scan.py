from fractions import Fraction

import pytest

from nestrad.discovery.dioph import dioph_scan
from nestrad.discovery.quotient_scan import admissible_bases, quotient_scan
from nestrad.errors import DomainError
from nestrad.identity.quotient import QuotientForm, verify_quotient
from nestrad.identity.records import Status


def form(x, y, z, w, b, m, n) -> QuotientForm:
    return QuotientForm(Fraction(x), Fraction(y), Fraction(z), Fraction(w), b, m, n)


def test_admissible_bases():
    assert admissible_bases(2, 10) == [2, 3, 5, 6, 7, 8, 10]
    assert admissible_bases(3, 10) == [2, 3, 4, 5, 6, 7, 9, 10]
    assert admissible_bases(6, 10) == [2, 3, 5, 6, 7, 10]


def test_square_root_surds():
    result = quotient_scan(4, 2, 10, 5)
    assert form(7, 4, 3, 1, 3, 2, 4) in result.forms
    assert all(verify_quotient(q) == Status.VERIFIED for q in result.forms)
    # with square roots every coprime (z, w) completes to a form
    assert len(result.forms) == result.examined
    assert result.skipped == 0


def test_fourth_root_surds_only_base_five():
    result = quotient_scan(4, 4, 10, 3)
    assert form(3, 2, 1, 1, 5, 4, 4) in result.forms
    assert {q.b for q in result.forms} == {5}


@pytest.mark.parametrize("n", [3, 5])
def test_odd_equal_degrees_have_no_forms(n):
    result = quotient_scan(n, n, 10, 5)
    assert result.forms == []
    assert result.examined > 0


def test_scan_arguments():
    with pytest.raises(DomainError):
        quotient_scan(1, 2, 10, 5)


def test_dioph_scan():
    assert dioph_scan(100, 5) == [(5, 1, 1)]
    assert dioph_scan(100, 5, fourth_power_free=False) == [(5, 1, 1), (80, 2, 1)]
    with pytest.raises(DomainError):
        dioph_scan(0, 5)


def test_dioph_scan_wider_range():
    # 80 = 2^4 * 5 and 405 = 3^4 * 5 are not fourth-power free
    assert dioph_scan(500, 50) == [(5, 1, 1)]
