DEFAULT_RANGE_I = (-32, 32)
DEFAULT_PAIR_RANGE = (-12, 12)
DEFAULT_LADDER_RANGE = (-5, 5)
DEFAULT_LADDER_STARTS = 20
DEFAULT_LADDER_DEPTH = 100
DEFAULT_LAW_SAMPLES = 10_000
DEFAULT_FLATTEN_SAMPLES = 10_000
DEFAULT_ALPHABET_BOUND = 5
DEFAULT_SEED = 0

# Alphabet of the exhaustive sequence family: nonzero, both sides of the midpoint
EXHAUSTIVE_ALPHABET = (-1, 1, 2)
EXHAUSTIVE_MAX_PREPERIOD = 3
EXHAUSTIVE_MAX_PERIOD = 4

SPECTRUM_PREFIX_LENGTH = 50

LOG_FORMAT = '%(asctime)s %(levelname)s %(name)s: %(message)s'
