"""Principal characters of two-generator Moebius groups."""

from ._moduli import *  # noqa: F401,F403
from ._moduli import ModuliError, MoebiusMap

__all__ = [name for name in dir() if not name.startswith("_")]
