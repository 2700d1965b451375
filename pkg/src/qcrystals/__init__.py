"""Crystals for the queer Lie superalgebra and its primed extension.

Three concrete models (primed words, increasing factorizations of primed
involution words, shifted tableaux) sit on top of a generic crystal engine.
"""

__version__ = "0.1.0"
