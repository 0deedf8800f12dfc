"""
The stacksort_roots library tabulates t-stack sortable permutations by descents, both by exhaustive
enumeration and by the known closed forms, and certifies the real-rootedness of the resulting descent
polynomials (plus the hypergeometric, Jacobi and multiplier-sequence identities behind the proof for
two stacks) using exact rational arithmetic only.
"""
name = "stacksort_roots"
