"""chevelem: exact elementary-subgroup factorization for Chevalley groups
of types A and C over Laurent polynomial and Laurent series rings."""

__version__ = "0.1.0"
