"""Engine defaults. The CLI overrides the working precision from the environment."""

# working precision (bits) for numeric evaluation and cross-checks
DEFAULT_PRECISION = 256

# starting precision of sign refinement, doubled until the interval excludes zero
SIGN_START_PRECISION = 64
MAX_PRECISION = 2**16

# largest field dimension accepted by inversion
MAX_DIMENSION = 512

# radicand numerators and denominators above this are not factored
MAX_RADICAND = 2**64

# discovery guards
MAX_CANDIDATES = 10**8
MAX_FREE_SLOTS = 4

PRECISION_ENV_VAR = "NESTRAD_PRECISION"
