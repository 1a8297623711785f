"""
nestrad: exact verification and discovery of nested radical identities over pure
radical extensions of the rationals.
"""

__version__ = "0.1.0"

from nestrad.algebra import (  # noqa: E402
    FieldSignature as FieldSignature,
    RadicalElement as RadicalElement,
    RadicalMonomial as RadicalMonomial,
    eval_numeric as eval_numeric,
    sign as sign,
)
from nestrad.identity import (  # noqa: E402
    IdentityRecord as IdentityRecord,
    Status as Status,
    verify as verify,
)
from nestrad.parser import parse as parse, parse_element as parse_element  # noqa: E402
