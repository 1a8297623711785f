from fractions import Fraction

import pytest

from nestrad.algebra.element import RadicalElement, normalize_radical, term_count
from nestrad.errors import DomainError
from nestrad.identity.families import (
    cross_identity,
    equivalence_chain,
    geom_ascending,
    geom_descending,
    geom_limit,
    geom_partial_sums,
    make_power_identity,
)
from nestrad.identity.records import Status
from nestrad.parser.lower import NestedClaim, parse_element

CUBE_ROOT_2 = normalize_radical(2, 3)
S = parse_element("root(3,1/9) - root(3,2/9) + root(3,4/9)")


def test_power_identity():
    rec = make_power_identity(S, 3, source="cube")
    assert rec.id == "power-3"
    assert rec.claim == NestedClaim(3, CUBE_ROOT_2 - 1)
    assert rec.status == Status.VERIFIED

    rec = make_power_identity(1 - normalize_radical(2, 2), 4, id="negated")
    assert rec.status == Status.VERIFIED
    assert rec.rhs == normalize_radical(2, 2) - 1
    assert rec.note == "principal root: right-hand side negated"

    with pytest.raises(DomainError):
        make_power_identity(S, 1)


def test_ascending_family_starts_with_cube_root_identity():
    rec = geom_ascending(1)
    assert rec.status == Status.VERIFIED
    assert rec.claim == NestedClaim(3, CUBE_ROOT_2 - 1)
    assert rec.rhs == S


@pytest.mark.parametrize("m", [1, 2, 3, 4, 5, 6, 7, 8])
def test_families_are_verified(m):
    for rec in (geom_ascending(m), geom_descending(m)):
        assert rec.status == Status.VERIFIED
        assert isinstance(rec.rhs, RadicalElement)
        # whole powers of 2 fold into the three basis monomials
        assert term_count(rec.rhs) == 3


def test_descending_scaling():
    scaled = geom_descending(2)
    assert scaled.id == "geom-desc-2"
    assert scaled.claim.radicand == Fraction(1, 32) * (CUBE_ROOT_2 - 1)

    unscaled = geom_descending(2, scaled=False)
    assert unscaled.status == Status.VERIFIED
    assert unscaled.claim.radicand == Fraction(9, 32) * (CUBE_ROOT_2 - 1)
    assert unscaled.rhs == parse_element(
        "1 - root(3,1/2) + root(3,1/4) - root(3,1/8) + root(3,1/16) - root(3,1/32)"
    )


def test_families_with_large_powers_of_two():
    # 2^(3m-1) is far above the factorization bound for m = 22
    for rec in (geom_ascending(22), geom_descending(22)):
        assert rec.status == Status.VERIFIED
        assert term_count(rec.rhs) == 3


def test_family_index_must_be_positive():
    with pytest.raises(DomainError):
        geom_ascending(0)
    with pytest.raises(DomainError):
        geom_descending(0)


def test_limit():
    rec = geom_limit()
    assert rec.status == Status.VERIFIED
    assert rec.claim.radicand == Fraction(2, 27) * (CUBE_ROOT_2 - 1)


def test_partial_sums_converge_one_bit_per_term():
    sums = geom_partial_sums([8, 40])
    assert all(p.exact_remainder for p in sums)
    assert sums[0].agreement_bits == pytest.approx(8, abs=0.01)
    assert sums[1].agreement_bits == pytest.approx(40, abs=0.01)


def test_equivalence_chain():
    chain = equivalence_chain(S, [1, 27, 36, 54, 81])
    assert [rec.id for rec in chain] == [
        "chain-1",
        "chain-27",
        "chain-36",
        "chain-54",
        "chain-81",
    ]
    assert all(rec.status == Status.VERIFIED for rec in chain)
    assert chain[0].source == "plain value"

    cross = cross_identity(chain[1], chain[3])
    assert cross.id == "chain-27=chain-54"
    assert cross.status == Status.VERIFIED


def test_triple_chain():
    s = 1 + normalize_radical(2, 2)
    four, five, six = equivalence_chain(s, [4, 5, 6])
    assert cross_identity(four, five).status == Status.VERIFIED
    assert cross_identity(five, six).status == Status.VERIFIED
    assert cross_identity(four, six).status == Status.VERIFIED


def test_chain_errors():
    with pytest.raises(DomainError):
        equivalence_chain(S, [])
    with pytest.raises(DomainError):
        equivalence_chain(S, [0])
