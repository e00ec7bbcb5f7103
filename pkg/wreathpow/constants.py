VERSION = "1.0"

# largest |G|^n n! the brute-force oracle is allowed to walk through
ORACLE_GUARD = 1000000

# the orbit check conjugates every element by every element, so it stops much earlier
CONJUGACY_GUARD = 5000

# symmetric groups above this degree are not built by the catalog (S6 has order 720)
MAX_SYMMETRIC_DEGREE = 6

# largest order any catalog group may have
MAX_CATALOG_ORDER = 720

# catalog tables up to this order are checked for associativity triple by triple
ASSOCIATIVITY_CHECK_LIMIT = 120

DEFAULT_SERIES_CAP = 10

# process exit codes
EXIT_OK = 0
EXIT_INPUT_ERROR = 1
EXIT_CONSISTENCY_FAILURE = 2
EXIT_REFUSED = 3
EXIT_VERIFY_FAILED = 4
