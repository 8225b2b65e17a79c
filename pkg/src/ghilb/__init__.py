"""Exact-arithmetic toolkit for G-Hilbert schemes of abelian quotient
singularities in dimension four and of the tetrahedral group in dimension
three: toric decompositions and their resolutions, monomial ideal
enumeration, chart ideals with parameter identities, and flop surgery.
"""

__version__ = "1.0.0"
