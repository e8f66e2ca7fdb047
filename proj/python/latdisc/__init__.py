"""Lattice point discrepancy of dilated convex bodies."""

from ._latdisc import *  # noqa: F401,F403
from ._latdisc import __doc__  # noqa: F401
