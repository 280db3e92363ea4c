"""One-dimensional discrete-time quantum walks.

Exact windowed evolution, closed-form stationary eigenstates whose measures
are uniform over Z, the finite-interval uniform probability construction,
and the closed-form limit measures with simulation comparisons.
"""

from ._core import *  # noqa: F401,F403
from ._core import __version__  # noqa: F401
