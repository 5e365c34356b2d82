"""Exact-arithmetic workbench for bigraded cell algebra over F2: extended
powers of Tate sums, vanishing-line certificates, graded Hopf algebra
splittings, coefficient commutation rewriting, and group-ring identities.
"""

from . import bigraded, extpower, gf2, gw, hopf, lattice, nsym, steenrod

__version__ = "0.1.0"

__all__ = [
    "bigraded", "extpower", "gf2", "gw", "hopf", "lattice", "nsym",
    "steenrod", "__version__",
]
