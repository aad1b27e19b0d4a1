"""Velocity-Markov lattice process toolkit."""

from ._velmark import *  # noqa: F401,F403
from ._velmark import __version__  # noqa: F401
