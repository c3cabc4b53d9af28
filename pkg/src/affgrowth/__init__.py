"""Affine growth diagrams, n-hives and the octahedron recurrence."""
from ._kernels import BACKEND
from .errors import InvariantError, ValidationError

__all__ = ["BACKEND", "InvariantError", "ValidationError"]
__version__ = "0.1.0"
