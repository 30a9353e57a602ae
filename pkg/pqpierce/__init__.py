"""Exact planar convex geometry for (p,q)-families and their piercing numbers."""

from pqpierce.errors import ErrorCode, PqPierceError

__version__ = "0.1.0"

__all__ = ["ErrorCode", "PqPierceError", "__version__"]
