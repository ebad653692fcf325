"""Dynamics, certificates and renders for the family z^n + a/z^n + c."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
