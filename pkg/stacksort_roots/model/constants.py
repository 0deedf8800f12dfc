DEFAULT_MAX_N = 12              # 12! permutations is the practical single machine edge
DEFAULT_CONJECTURE_MAX_N = 9    # Keeps the full (n, t) scan within minutes
MAX_N_ENV_VAR = "STACKSORT_MAX_N"
