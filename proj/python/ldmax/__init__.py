"""Exact and Monte Carlo tail asymptotics for maxima of heavy-tailed samples."""

from ._ldmax import *  # noqa: F401,F403
from ._ldmax import __doc__  # noqa: F401
