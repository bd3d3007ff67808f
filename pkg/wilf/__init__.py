"""Super-strong Wilf equivalence classes and shift equivalence of permutations."""
