"""critline: Epstein zeta functions, Hecke L-functions and critical-line zeros."""

__version__ = "0.1.0"
