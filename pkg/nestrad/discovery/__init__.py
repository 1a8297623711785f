from .coeff import (
    CoefficientTemplate as CoefficientTemplate,
    coeff_scan as coeff_scan,
    parse_template as parse_template,
    template_expansion as template_expansion,
)
from .denest import denest_scan as denest_scan
from .dioph import dioph_scan as dioph_scan
from .domain import SearchDomain as SearchDomain
from .power import (
    PowerHit as PowerHit,
    PowerScanResult as PowerScanResult,
    power_scan as power_scan,
)
from .quotient_scan import (
    QuotientScanResult as QuotientScanResult,
    quotient_scan as quotient_scan,
)
