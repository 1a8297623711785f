from .engine import (
    Interestingness as Interestingness,
    interestingness as interestingness,
    numeric_agreement as numeric_agreement,
    verify as verify,
    verify_record as verify_record,
)
from .families import (
    cross_identity as cross_identity,
    equivalence_chain as equivalence_chain,
    geom_ascending as geom_ascending,
    geom_descending as geom_descending,
    geom_limit as geom_limit,
    geom_partial_sums as geom_partial_sums,
    make_power_identity as make_power_identity,
)
from .quotient import (
    QuotientForm as QuotientForm,
    quotient_record as quotient_record,
    verify_quotient as verify_quotient,
)
from .records import (
    IdentityRecord as IdentityRecord,
    QuotientPair as QuotientPair,
    Status as Status,
)
