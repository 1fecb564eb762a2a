"""Contains constants for the program."""

# Default seed for every random corpus and random graph
DEFAULT_SEED = 42


# Default exact-search budget: search nodes and wall-clock milliseconds
DEFAULT_BUDGET_NODES = 10 ** 7
DEFAULT_BUDGET_MS = 60000


# Default number of worker processes for the verification harness
DEFAULT_WORKERS = 1


# Vertices must satisfy |v| <= COORDINATE_BOUND, and so must matrix
# entries; every linear form then fits in a signed 64-bit integer
COORDINATE_BOUND = 2 ** 31


# Linear forms are checked against the signed 64-bit range
INT64_MIN = -(2 ** 63)
INT64_MAX = 2 ** 63 - 1


# Largest number of vertices for exhaustive ordering searches
MAX_ORDERING_VERTICES = 9


# Random corpus defaults: number of graphs and the range of vertex counts
DEFAULT_CORPUS_COUNT = 10 ** 4
RANDOM_MIN_VERTICES = 3
RANDOM_MAX_VERTICES = 8


# Largest k tried when inverting A and W into X values
MAX_INVERSION_K = 2 ** 62


# Kinds of closed-form results
EXACT = "exact"
BOUNDS = "bounds"
INFINITE = "infinite"
UNKNOWN = "unknown"

FORMULA_KINDS = (EXACT, BOUNDS, INFINITE, UNKNOWN)


# Statuses of verification reports
PASS = "pass"
FAIL = "fail"
PARTIAL = "partial"

REPORT_STATUSES = (PASS, FAIL, PARTIAL)


# Enumeration modes
EXHAUSTIVE = "exhaustive"
RANDOM = "random"


# Sides of an extremal question: independence (A) or clique (W)
A_SIDE = "A"
W_SIDE = "W"


# Kinds of interval witnesses for independent sets of (+,0,0,-)
MEETS_ALL_SPANS = "meets-all-spans"
CONTAINED_IN_ALL_SPANS = "contained-in-all-spans"
SHORT_EDGE_EXCEPTION = "short-edge-exception"


# Matrix classification tags
NON_INVARIANT_POSITIVE = "non-invariant-positive"
NON_INVARIANT_NEGATIVE = "non-invariant-negative"
NON_INVARIANT_MIXED = "non-invariant-mixed"
ZERO = "zero"
TABLE_ROW = "table-row"
NEST_LIKE = "nest-like"
COMPLEMENT_EXCHANGE = "complement-exchange"
GENERAL_INVARIANT = "general-invariant"


# Names of the two transforms that preserve A and W
REVERSE_NEGATE = "reverse_negate"
SWAP_EDGE_ROLES = "swap_edge_roles"


# Named matrices
CROSS_MATRIX = ((-1, 0, 1, 0), (0, 1, -1, 0), (0, -1, 0, 1))
NEST_MATRIX = ((1, 0, -1, 0), (0, -1, 0, 1))
SHIFT_MATRIX = ((1, 0, -1, 0), (0, 1, 0, -1))
DEGENERACY_MATRIX = ((0, 1, 0, -1), (0, -1, 0, 1))
BAND_WIDTH_MATRIX = ((-1, 1, 0, 0),)
ARCH_MATRIX = ((1, 0, 0, -1),)

NAMED_MATRICES = {
    "cross": CROSS_MATRIX,
    "nest": NEST_MATRIX,
    "shift": SHIFT_MATRIX,
    "degeneracy": DEGENERACY_MATRIX,
    "band-width": BAND_WIDTH_MATRIX,
    "arch": ARCH_MATRIX,
}


# Graph parameters computed through the conflict framework
PAGE_NUMBER = "page-number"
QUEUE_NUMBER = "queue-number"
DEGENERACY = "degeneracy"
BAND_WIDTH = "band-width"
INTERVAL_CHROMATIC = "interval-chromatic"
ARCH_NUMBER = "arch-number"

GRAPH_PARAMETERS = (
    PAGE_NUMBER,
    QUEUE_NUMBER,
    DEGENERACY,
    BAND_WIDTH,
    INTERVAL_CHROMATIC,
    ARCH_NUMBER,
)


# Verification suites
VERIFY_SUITES = (
    "table1",
    "table2",
    "lemmas",
    "theorem1",
    "nest",
    "density",
    "lower",
    "question15",
)


# Property suites run by verify_lemma_suite
LEMMA_IDS = (
    "swap",
    "reverse-negate",
    "complement",
    "long-edges",
    "comparability",
    "interval-witness",
    "nest-shift",
)


# Widest coordinate window an exhaustive enumeration may use
MAX_EXHAUSTIVE_WINDOW = 12


# Edge probability of random corpus graphs
RANDOM_EDGE_PROBABILITY = 0.5


# Largest independence or clique bound compared by the table2 suite
TABLE2_MAX_BOUND = 40


# Default corpus sizes of the suites that draw random graphs
LEMMA_CORPUS_COUNT = 500
THEOREM1_CORPUS_COUNT = 20
DENSITY_CORPUS_COUNT = 500
LONG_EDGE_CORPUS_COUNT = 5000


# Graphs with chi >= 4 the long-edges lemma must check
LONG_EDGE_TARGET = 100


# Number of random non-invariant matrices checked by the theorem1 suite
THEOREM1_RANDOM_MATRICES = 10
