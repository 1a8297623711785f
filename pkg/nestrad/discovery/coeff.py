"""
Coefficient search: put unknown rational coefficients on the addends of a denested
element, raise it to a power and keep the assignments that make chosen monomials of the
power vanish.
"""

import logging
from collections import defaultdict
from collections.abc import Mapping, Sequence
from dataclasses import dataclass, field
from fractions import Fraction
from functools import partial

import sympy

from nestrad.algebra.element import (
    FieldSignature,
    RadicalElement,
    linear_combination,
    power,
)
from nestrad.algebra.monomial import RadicalMonomial
from nestrad.config import MAX_FREE_SLOTS
from nestrad.discovery.domain import SearchDomain
from nestrad.discovery.parallel import parallel_map
from nestrad.errors import DomainError, ResourceError
from nestrad.identity.families import make_power_identity
from nestrad.identity.records import IdentityRecord
from nestrad.parser.lower import parse_element

logger = logging.getLogger(__name__)

SLOT_NAMES = ("x", "y", "z", "w")
FREE_MARKER = "?*"


@dataclass(frozen=True)
class CoefficientTemplate:
    """
    sum_i c_i * monomials[i] where c_i is pinned by `fixed` or free. Free slots are
    named x, y, z, w in order.

    Args:
        monomials (tuple[RadicalElement, ...]): single-term addends, with scale factors
        fixed (Mapping[int, Fraction]): pinned coefficient per slot
        free (tuple[int, ...]): slots searched over
        power (int): exponent applied to the assembled element
        vanish (frozenset[RadicalMonomial]): monomials whose coefficient in the power
            must be zero
    """

    monomials: tuple[RadicalElement, ...]
    fixed: Mapping[int, Fraction] = field(default_factory=dict)
    free: tuple[int, ...] = ()
    power: int = 2
    vanish: frozenset[RadicalMonomial] = frozenset()

    def __post_init__(self):
        slots = range(len(self.monomials))
        if sorted([*self.fixed, *self.free]) != list(slots):
            raise DomainError("fixed and free slots must partition the template addends")
        if any(len(m) != 1 for m in self.monomials):
            raise DomainError("template addends must be single nonzero terms")
        if self.power < 1:
            raise DomainError(f"template power must be positive, got {self.power}")
        if len(self.free) > MAX_FREE_SLOTS:
            raise ResourceError(
                f"{len(self.free)} free slots exceed the bound of {MAX_FREE_SLOTS}"
            )
        signature = FieldSignature.of(*self.monomials)
        for monomial in self.vanish:
            if not signature.contains(monomial):
                raise DomainError(f"vanishing monomial {monomial} is outside {signature}")

    def names(self) -> dict[int, str]:
        return {slot: SLOT_NAMES[i] for i, slot in enumerate(self.free)}

    def assemble(self, assignment: Sequence[Fraction]) -> RadicalElement:
        """The element with free slots set to `assignment` (in `free` order)."""
        coefficients = dict(self.fixed)
        coefficients.update(zip(self.free, assignment))
        return linear_combination(
            (coefficients[i], m) for i, m in enumerate(self.monomials)
        )


def parse_template(
    addends: Sequence[str], power: int, vanish: Sequence[str] = ()
) -> CoefficientTemplate:
    """
    Build a template from addend strings; a leading "?*" marks a free slot, e.g.
    ["root(4,7)", "?*sqrt(7)", "?*root(4,343)", "?*7"].
    """
    monomials, fixed, free = [], {}, []
    for slot, text in enumerate(addends):
        text = text.strip()
        if text.startswith(FREE_MARKER):
            free.append(slot)
            text = text[len(FREE_MARKER) :]
        else:
            fixed[slot] = Fraction(1)
        monomials.append(parse_element(text))

    vanishing = set()
    for text in vanish:
        element = parse_element(text)
        if len(element) != 1:
            raise DomainError(f"vanishing term {text!r} is not a single monomial")
        vanishing.add(element.monomials()[0])
    return CoefficientTemplate(
        tuple(monomials), fixed, tuple(free), power, frozenset(vanishing)
    )


def _scan_chunk(
    t: CoefficientTemplate, assignments: Sequence[tuple[Fraction, ...]]
) -> list[tuple[tuple[Fraction, ...], RadicalElement]]:
    hits = []
    for assignment in assignments:
        s = t.assemble(assignment)
        powered = power(s, t.power)
        if all(powered.coefficient(m) == 0 for m in t.vanish):
            hits.append((assignment, s))
    return hits


def coeff_scan(
    t: CoefficientTemplate, d: SearchDomain, workers: int = 1
) -> list[tuple[tuple[Fraction, ...], IdentityRecord]]:
    """
    Enumerate assignments of the free slots over d and keep those where every vanish
    monomial has coefficient zero in the power. Each hit gives the verified power
    identity root(power, s^power) = s.

    Args:
        t (CoefficientTemplate): the template
        d (SearchDomain): coefficient domain for every free slot
        workers (int, optional): processes for the scan. Defaults to 1.

    Returns:
        list[tuple[tuple[Fraction, ...], IdentityRecord]]: hits in enumeration order
    """
    assignments = d.assignments(len(t.free))
    logger.info(f"Scanning {len(assignments)} assignments of {len(t.free)} free slots")
    hits = parallel_map(partial(_scan_chunk, t), assignments, workers)
    results = []
    for assignment, s in hits:
        label = ",".join(str(v) for v in assignment)
        record = make_power_identity(
            s, t.power, id=f"coeff-{label}", source="coefficient scan"
        )
        results.append((assignment, record))
    logger.info(f"Found {len(results)} assignments")
    return results


def _sympy_rational(value: Fraction) -> sympy.Rational:
    return sympy.Rational(value.numerator, value.denominator)


def template_expansion(t: CoefficientTemplate) -> dict[RadicalMonomial, sympy.Expr]:
    """
    The coefficient of every monomial of the power as a polynomial in the free slots,
    e.g. {7^(3/4): 2*x + 14*y*z, ...} for (7^(1/4) + x*7^(1/2) + y*7^(3/4) + 7*z)^2.
    """
    names = t.names()
    symbols = {slot: sympy.Symbol(name) for slot, name in names.items()}

    base: dict[RadicalMonomial, sympy.Expr] = defaultdict(lambda: sympy.Integer(0))
    for slot, element in enumerate(t.monomials):
        monomial, scale = element.terms[0]
        weight = symbols.get(slot, _sympy_rational(t.fixed.get(slot, Fraction(0))))
        base[monomial] += _sympy_rational(scale) * weight

    result: dict[RadicalMonomial, sympy.Expr] = {RadicalMonomial(): sympy.Integer(1)}
    for _ in range(t.power):
        product: dict[RadicalMonomial, sympy.Expr] = defaultdict(lambda: sympy.Integer(0))
        for ma, ca in result.items():
            for mb, cb in base.items():
                carry, m = ma.times(mb)
                product[m] += carry * ca * cb
        result = {m: sympy.expand(c) for m, c in product.items()}
    ordered = sorted(result.items(), key=lambda item: item[0].sort_key)
    return {m: c for m, c in ordered if c != 0}
