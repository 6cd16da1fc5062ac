"""Exact maj/des generating functions for pattern-avoiding permutations and
standard Young tableaux, backed by the C++ core."""

from ._majdes import *  # noqa: F401,F403
from ._majdes import __doc__  # noqa: F401
