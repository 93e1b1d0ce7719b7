"""syntaft: exact computations linking weighted automata, finite-dimensional
algebras, biprefix codes, 2D lattice TFT state sums and weighted MSO logic.

Everything is computed over the rationals with arbitrary precision; there is
no floating point anywhere in the library.
"""

__version__ = "0.1.0"
