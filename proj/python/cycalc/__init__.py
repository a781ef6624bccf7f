"""Serre functor powers and fractional Calabi-Yau components, from Python."""

from ._cycalc import *  # noqa: F401,F403
from ._cycalc import __version__  # noqa: F401
