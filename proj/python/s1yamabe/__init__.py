"""Python access to the s1yamabe core: orbifold invariants, Yamabe functionals of
circle-invariant metrics, the radial Laplace solver and the conformal minimizer."""

from ._core import *  # noqa: F401,F403
from ._core import Error, __version__  # noqa: F401
