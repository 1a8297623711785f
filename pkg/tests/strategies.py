from fractions import Fraction

from hypothesis import strategies as st

from nestrad.algebra.element import FieldSignature, RadicalElement

# small fields, dimension at most 9
SIGNATURES = [
    FieldSignature.from_mapping(m)
    for m in (
        {2: 2},
        {2: 3},
        {3: 3},
        {7: 4},
        {2: 6},
        {2: 2, 3: 2},
        {2: 3, 3: 3},
        {2: 3, 5: 2},
    )
]

rationals = st.builds(Fraction, st.integers(-(10**6), 10**6), st.integers(1, 10**6))
nonzero_rationals = rationals.filter(lambda r: r != 0)


@st.composite
def elements(draw, max_terms: int = 6) -> RadicalElement:
    signature = draw(st.sampled_from(SIGNATURES))
    monomials = draw(
        st.lists(st.sampled_from(signature.basis()), max_size=max_terms, unique=True)
    )
    coefficients = draw(
        st.lists(rationals, min_size=len(monomials), max_size=len(monomials))
    )
    return RadicalElement.from_mapping(dict(zip(monomials, coefficients)))


def nonzero_elements(max_terms: int = 6):
    return elements(max_terms).filter(lambda e: not e.is_zero)


def scalars():
    return st.one_of(st.integers(-50, 50), rationals.map(Fraction))
