"""Exact index calculus for 1-forms on stratified spaces.

Thin re-export of the compiled core; see the C++ headers for the full
documentation of each operation.
"""

from stratindex._core import *  # noqa: F401,F403
from stratindex._core import __version__  # noqa: F401
