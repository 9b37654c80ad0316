"""Domain models and algorithms for loopy colour refinement."""
