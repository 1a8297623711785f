from .ast import ExprAst as ExprAst
from .expr_parser import parse as parse
from .lower import (
    LoweringResult as LoweringResult,
    NestedClaim as NestedClaim,
    QuotientClaim as QuotientClaim,
    lower as lower,
    lower_text as lower_text,
    parse_element as parse_element,
)
from .printer import print_canonical as print_canonical, print_latex as print_latex
