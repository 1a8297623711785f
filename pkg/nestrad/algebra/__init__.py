from .element import (
    ONE as ONE,
    ZERO as ZERO,
    FieldSignature as FieldSignature,
    RadicalElement as RadicalElement,
    add as add,
    inverse as inverse,
    mul as mul,
    neg as neg,
    normalize_radical as normalize_radical,
    power as power,
    sub as sub,
    term_count as term_count,
)
from .monomial import UNIT as UNIT, RadicalMonomial as RadicalMonomial
from .numbers import Rational as Rational
from .numeric import (
    NumericValue as NumericValue,
    approximate as approximate,
    eval_numeric as eval_numeric,
    sign as sign,
)
