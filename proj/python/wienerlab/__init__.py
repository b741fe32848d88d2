"""Exact Wiener-index tools for trees of given order and diameter."""

from ._core import *  # noqa: F401,F403
from ._core import WienerlabError, lemma_ids

__all__ = [name for name in dir() if not name.startswith("_")]
