"""Tilings of the symmetric group by transposition sets."""

from sn_tiler.errors import InputError
from sn_tiler.partitions import Partition, enumerate_partitions
from sn_tiler.perms import ClassSet, Permutation, Target

__version__ = "0.1.0"

# (g*h)(i) = g(h(i)): the right factor acts first.
COMPOSITION_CONVENTION = "right-first"

__all__ = [
    "COMPOSITION_CONVENTION",
    "ClassSet",
    "InputError",
    "Partition",
    "Permutation",
    "Target",
    "__version__",
    "enumerate_partitions",
]
