"""Exact Coxeter-group, character-table and Hecke-algebra combinatorics."""

__version__ = "0.1.0"
