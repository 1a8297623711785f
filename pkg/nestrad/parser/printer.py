from fractions import Fraction

from nestrad.algebra.element import RadicalElement
from nestrad.algebra.monomial import RadicalMonomial
from nestrad.parser.lower import NestedClaim, QuotientClaim


def _join(parts: list[tuple[bool, str]]) -> str:
    if not parts:
        return "0"
    negative, text = parts[0]
    out = f"-{text}" if negative else text
    for negative, text in parts[1:]:
        out += f" - {text}" if negative else f" + {text}"
    return out


def print_canonical(e: RadicalElement) -> str:
    """
    Canonical text of an element in the input language. Terms follow the element's
    monomial order (unit first, then by number of primes, then by prime and exponent).
    """
    parts = []
    for monomial, c in e.terms:
        magnitude = abs(c)
        if monomial.is_unit:
            text = str(magnitude)
        elif magnitude == 1:
            text = str(monomial)
        else:
            text = f"{magnitude} * {monomial}"
        parts.append((c < 0, text))
    return _join(parts)


def _latex_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"\\frac{{{value.numerator}}}{{{value.denominator}}}"


def _latex_monomial(monomial: RadicalMonomial) -> str:
    n, d = monomial.radical_form()
    return f"\\sqrt{{{n}}}" if d == 2 else f"\\sqrt[{d}]{{{n}}}"


def print_latex(e: RadicalElement) -> str:
    parts = []
    for monomial, c in e.terms:
        magnitude = abs(c)
        if monomial.is_unit:
            text = _latex_rational(magnitude)
        elif magnitude == 1:
            text = _latex_monomial(monomial)
        else:
            text = _latex_rational(magnitude) + _latex_monomial(monomial)
        parts.append((c < 0, text))
    return _join(parts)


def print_claim(claim: NestedClaim | QuotientClaim) -> str:
    if isinstance(claim, QuotientClaim):
        return (
            f"root({claim.degree}, ({print_canonical(claim.numerator)})"
            f" / ({print_canonical(claim.denominator)}))"
        )
    if claim.degree == 1:
        return print_canonical(claim.radicand)
    return f"root({claim.degree}, {print_canonical(claim.radicand)})"


def print_latex_claim(claim: NestedClaim | QuotientClaim) -> str:
    if isinstance(claim, QuotientClaim):
        numerator = print_latex(claim.numerator)
        denominator = print_latex(claim.denominator)
        body = f"\\frac{{{numerator}}}{{{denominator}}}"
    else:
        body = print_latex(claim.radicand)
        if claim.degree == 1:
            return body
    if claim.degree == 2:
        return f"\\sqrt{{{body}}}"
    return f"\\sqrt[{claim.degree}]{{{body}}}"
