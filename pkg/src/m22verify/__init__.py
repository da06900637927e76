"""Independent verification toolkit for a family of degree-22 covers:
exact polynomial arithmetic, finite-field factorization, permutation
group machinery, covering-group data, and a claim-checking CLI."""

__version__ = "0.1.0"
