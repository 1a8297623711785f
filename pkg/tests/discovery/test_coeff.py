from fractions import Fraction

import pytest
import sympy

from nestrad.algebra.monomial import UNIT, RadicalMonomial
from nestrad.discovery.coeff import coeff_scan, parse_template, template_expansion
from nestrad.discovery.domain import SearchDomain
from nestrad.errors import DomainError, ResourceError
from nestrad.identity.records import Status
from nestrad.parser.lower import NestedClaim, parse_element

ADDENDS = ["root(4,7)", "?*sqrt(7)", "?*root(4,343)", "?*7"]


@pytest.fixture(scope="module")
def template():
    return parse_template(ADDENDS, 2, vanish=["root(4,343)"])


@pytest.fixture(scope="module")
def hits(template):
    return coeff_scan(template, SearchDomain.integers(7))


def test_parse_template(template):
    assert template.free == (1, 2, 3)
    assert template.fixed == {0: 1}
    assert template.names() == {1: "x", 2: "y", 3: "z"}
    assert template.vanish == frozenset([RadicalMonomial.of({7: "3/4"})])
    assert template.assemble([Fraction(7), Fraction(1), Fraction(-1)]) == parse_element(
        "root(4,7) + 7*sqrt(7) + root(4,343) - 7"
    )


def test_scan_finds_denested_square_root(hits):
    found = dict(hits)
    assignment = (Fraction(7), Fraction(1), Fraction(-1))
    assert assignment in found
    record = found[assignment]
    assert record.id == "coeff-7,1,-1"
    assert record.status == Status.VERIFIED
    assert record.claim == NestedClaim(
        2, parse_element("406 + 84*root(4,7) - 90*sqrt(7)")
    )


def test_scan_keeps_only_vanishing_assignments(hits):
    found = {assignment for assignment, _ in hits}
    assert (Fraction(1), Fraction(1), Fraction(1)) not in found
    # the 7^(3/4) coefficient of the square is 2x + 14yz
    assert all(2 * x + 14 * y * z == 0 for x, y, z in found)
    assert len(found) == sum(
        1
        for x in range(-7, 8)
        for y in range(-7, 8)
        for z in range(-7, 8)
        if 2 * x + 14 * y * z == 0
    )


def test_template_expansion(template):
    x, y, z = sympy.symbols("x y z")
    expansion = template_expansion(template)
    expected = {
        UNIT: 7 * x**2 + 14 * y + 49 * z**2,
        RadicalMonomial.of({7: "1/4"}): 14 * x * y + 14 * z,
        RadicalMonomial.of({7: "1/2"}): 1 + 7 * y**2 + 14 * x * z,
        RadicalMonomial.of({7: "3/4"}): 2 * x + 14 * y * z,
    }
    assert expansion.keys() == expected.keys()
    for monomial, polynomial in expected.items():
        assert sympy.expand(expansion[monomial] - polynomial) == 0
    assert expected[RadicalMonomial.of({7: "1/2"})].subs({x: 7, y: 1, z: -1}) == -90


def test_template_errors():
    with pytest.raises(ResourceError):
        parse_template(["?*1", "?*sqrt(2)", "?*sqrt(3)", "?*sqrt(5)", "?*sqrt(6)"], 2)
    with pytest.raises(DomainError):
        parse_template(["1 + sqrt(2)", "?*sqrt(3)"], 2)
    with pytest.raises(DomainError):
        parse_template(ADDENDS, 2, vanish=["1 + root(4,7)"])
    with pytest.raises(DomainError):
        parse_template(ADDENDS, 2, vanish=["sqrt(2)"])
    with pytest.raises(DomainError):
        parse_template(ADDENDS, 0)
