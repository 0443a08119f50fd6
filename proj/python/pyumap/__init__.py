"""Unicellular maps on orientable and non-orientable surfaces."""

from ._core import *  # noqa: F401,F403
from ._core import UmapError, RibbonMap

__all__ = [name for name in dir() if not name.startswith("_")]
