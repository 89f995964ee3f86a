"""
hiercost constants

Caps, tolerances and iteration budgets shared by every module.
"""

HIERCOST_NAME = "hiercost"
HIERCOST_VERSION = "0.3.0"

# =============================================================================
# HARD CAPS FOR EXHAUSTIVE ROUTINES
# =============================================================================

# enumerate_trees: (2n-3)!! binary trees, 135135 at n=8
ENUMERATION_CAP = 8

# optimal_tree_bruteforce / max_tree_bruteforce
BRUTEFORCE_CAP = 8

# sparsest_cut_exact / balanced_f_cut(mode="exact"): 2^(n-1) - 1 bipartitions
EXACT_CUT_CAP = 20

# naesat_brute: 2^n assignments
NAESAT_BRUTE_CAP = 20

# enumerate_naestar: variables per enumerated instance
NAESTAR_ENUMERATION_CAP = 4

# Masks evaluated per vectorized block in exact cut enumeration
EXACT_CUT_BLOCK = 1 << 15

# Assignments evaluated per vectorized block in naesat_brute
NAESAT_BRUTE_BLOCK = 1 << 14

# =============================================================================
# NUMERICAL TOLERANCES
# =============================================================================

# Relative tolerance for real-weight comparisons
REL_TOL = 1e-9

# Power iteration stops when successive unit vectors differ by less than this
POWER_ITERATION_TOL = 1e-8

# A converged Fiedler vector v satisfies ||L v - lambda v|| <= FIEDLER_RESIDUAL_TOL * ||v||
FIEDLER_RESIDUAL_TOL = 1e-6

# Power iteration runs at most POWER_ITERATION_FACTOR * n^2 steps
POWER_ITERATION_FACTOR = 10

# Local search makes at most LOCAL_SEARCH_FACTOR * n improving moves
LOCAL_SEARCH_FACTOR = 10

# =============================================================================
# CLI EXIT CODES
# =============================================================================

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2

# =============================================================================
# EXPERIMENTS
# =============================================================================

# Failure probability used when reporting the high-probability planted epsilon
PLANTED_DELTA = 0.05

# Approximation guarantee of greedy top-down splitting with exact cuts: (27/4) ln n
GREEDY_BOUND_FACTOR = 27 / 4
