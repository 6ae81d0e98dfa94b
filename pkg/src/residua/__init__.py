"""residua: finite commutative rings as operation tables.

Residue fields, fields of representatives, split extensions/semidirect
products, and I-adic completion for desk-scale finite rings, with an
exhaustive verification CLI.
"""

__version__ = "0.1.0"

from residua.kernels import BACKEND as KERNEL_BACKEND  # noqa: F401
