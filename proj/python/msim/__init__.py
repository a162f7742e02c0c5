"""Python access to the msim toolkit: Misiurewicz parameters, Poincare
functions, rescaled Julia/Mandelbrot/tricorn grids and Hausdorff tables."""

from ._core import *  # noqa: F401,F403
from ._core import MsimError

__all__ = [name for name in dir() if not name.startswith("_")]
