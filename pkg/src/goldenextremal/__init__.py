"""Exact golden-field arithmetic and extremal semicircle-circumscribing triangles."""

__version__ = "0.1.0"

from .exactphi import PHI, QPhi, Radical, fib, phi_pow_decompose  # noqa: E402

__all__ = ["PHI", "QPhi", "Radical", "fib", "phi_pow_decompose", "__version__"]
