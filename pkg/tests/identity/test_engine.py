import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from nestrad.algebra.element import RadicalElement, normalize_radical
from nestrad.errors import StateError
from nestrad.identity.engine import (
    interestingness,
    numeric_agreement,
    verify,
    verify_record,
)
from nestrad.identity.families import make_power_identity
from nestrad.identity.records import IdentityRecord, QuotientPair, Status, side_terms
from nestrad.parser.lower import NestedClaim, lower_text, parse_element
from tests.strategies import elements

SQRT2 = normalize_radical(2, 2)
SQRT3 = normalize_radical(3, 2)


def record(lhs: str, rhs: str, id: str = "test") -> IdentityRecord:
    return IdentityRecord(id, lower_text(lhs), lower_text(rhs))


def test_cube_root_identity_is_verified():
    rec = verify_record(
        record("root(3, root(3,2) - 1)", "root(3,1/9) - root(3,2/9) + root(3,4/9)")
    )
    assert rec.status == Status.VERIFIED
    assert rec.note == ""
    assert str(rec).startswith("[verified-exact] root(3, -1 + 2^(1/3)) = ")
    info = interestingness(rec)
    assert (info.lhs_terms, info.rhs_terms, info.interesting) == (2, 3, True)


def test_misprinted_identity_is_refuted():
    rec = record("root(3, 28917 + 64638*root(3,7))", "12*root(3,49) + 21 - 27*root(3,7)")
    assert verify(rec) == Status.REFUTED
    assert not numeric_agreement(rec)


def test_even_root_branch():
    assert verify(record("sqrt(3 - 2*sqrt(2))", "sqrt(2) - 1")) == Status.VERIFIED
    rec = verify_record(record("sqrt(3 - 2*sqrt(2))", "1 - sqrt(2)"))
    assert rec.status == Status.REFUTED_BRANCH
    assert "negative" in rec.note


def test_odd_root_of_negative_radicand():
    s = parse_element("root(3,1/9) - root(3,2/9) + root(3,4/9)")
    rec = IdentityRecord("odd", NestedClaim(3, 1 - normalize_radical(2, 3)), -s)
    assert verify(rec) == Status.VERIFIED


def test_cross_roots():
    rec = record("sqrt(3 + 2*sqrt(2))", "root(4, 17 + 12*sqrt(2))")
    assert isinstance(rec.rhs, NestedClaim)
    assert verify(rec) == Status.VERIFIED
    assert numeric_agreement(rec)

    assert verify(record("sqrt(3 + 2*sqrt(2))", "root(4, 17 - 12*sqrt(2))")) == (
        Status.REFUTED
    )

    # (-8)^2 = 4^3, yet the cube root of -8 is negative
    opposite = IdentityRecord(
        "opposite",
        NestedClaim(3, RadicalElement.rational(-8)),
        NestedClaim(2, RadicalElement.rational(4)),
    )
    rec = verify_record(opposite)
    assert rec.status == Status.REFUTED_BRANCH
    assert rec.note == "roots have opposite signs"

    negative = IdentityRecord(
        "negative", NestedClaim(2, 1 - SQRT2), NestedClaim(4, 3 - 2 * SQRT2)
    )
    assert verify(negative) == Status.REFUTED_BRANCH


def test_quotient_claims():
    claim = lower_text("root(4, (7 + 4*sqrt(3)) / (7 - 4*sqrt(3)))")
    rec = IdentityRecord("q", claim, QuotientPair(3 + SQRT3, 3 - SQRT3))
    assert verify(rec) == Status.VERIFIED
    assert numeric_agreement(rec)
    assert side_terms(rec.claim) == 4
    assert side_terms(rec.rhs) == 4
    assert not interestingness(verify_record(rec)).interesting

    flipped = IdentityRecord("q", claim, QuotientPair(-(3 + SQRT3), 3 - SQRT3))
    assert verify(flipped) == Status.REFUTED_BRANCH


def test_degenerate_denominator_is_indeterminate():
    claim = lower_text("root(3, (1 + sqrt(2)) / (1 - sqrt(2)))")
    rec = verify_record(
        IdentityRecord("zero", claim, QuotientPair(SQRT2, RadicalElement()))
    )
    assert rec.status == Status.INDETERMINATE
    assert "denominator" in rec.note


def test_interestingness_needs_verified_record():
    rec = record("root(3, root(3,2) - 1)", "root(3,1/9)")
    with pytest.raises(StateError):
        interestingness(rec)
    with pytest.raises(StateError):
        interestingness(verify_record(rec))


@settings(max_examples=200, derandomize=True, deadline=None)
@given(elements(max_terms=3), st.integers(min_value=2, max_value=6))
def test_verified_power_identities_agree_numerically(s, n):
    rec = make_power_identity(s, n)
    assert rec.status == Status.VERIFIED
    assert numeric_agreement(rec, precision_bits=256)
