"""Exact invariants of small three-mode arrays."""

from ._hyperdet import *  # noqa: F401,F403
from ._hyperdet import Polynomial, ShapeMismatch, ParseError, InfeasibleDegree, Error  # noqa: F401
