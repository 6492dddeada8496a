"""Transversal enumeration, exchange and sampling (C++ core)."""

from ._core import *  # noqa: F401,F403
from ._core import TransversalError, __doc__  # noqa: F401
