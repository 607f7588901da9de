"""Character tables, pi-partial characters and their kernels for small permutation groups."""

__version__ = "0.1.0"
