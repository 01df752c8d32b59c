"""Dominating-set reconfiguration under (directed) token sliding."""

from ._dsr import *  # noqa: F401,F403
from ._dsr import __doc__  # noqa: F401
