"""Exact symbolic kernel for q-deformed sphere algebras.

Subpackages cover the coefficient field Q(q), normal forms in the
twisted coordinate algebra of quantum n-space, the quantized gl(n)
action, q-special functions, the Haar functional, q-disk polynomials,
and machine verification of their addition formula by exact reduction.
"""

__version__ = "0.1.0"
