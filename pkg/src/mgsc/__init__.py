"""Combinatorics of the modular generalized Springer correspondence.

Submodules: ``partitions`` (partition algebra), ``rootdata`` (Cartan types,
Weyl group orders, minimal Levis containing an ell-Sylow), ``glspringer``
(the full correspondence for GL(n)), ``classical`` (cuspidal pairs for
B/C/D at ell = 2), ``tables`` (stored exceptional data) and ``cli``.
"""

from .factored import FactoredOrder
from .partitions import Partition
from .rootdata import CartanType

__version__ = "0.1.0"

__all__ = ["FactoredOrder", "Partition", "CartanType"]
