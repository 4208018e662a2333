"""Anisotropic Hermite-Gauss functions, their transforms and Wigner distributions."""

from ._core import *  # noqa: F401,F403
from ._core import (
    AhgError,
    AnisotropyMatrix,
    ConvergenceError,
    DomainError,
    ResourceError,
    UsageError,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "1.0.0"
