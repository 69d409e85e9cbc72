"""Largest graphs of given order and diameter."""

from ._core import *  # noqa: F401,F403
from ._core import (
    CapacityError,
    DomainError,
    Graph,
    InputError,
    ParseError,
)

__all__ = [name for name in dir() if not name.startswith("_")]
