"""q^2-Fourier transform on the lattice {+-q^(2m)}: special functions,
skeleton transforms, distributions and their transform table."""

from ._core import *  # noqa: F401,F403
from ._core import __doc__  # noqa: F401
