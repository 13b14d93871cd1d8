from ._cubiso import *  # noqa: F401,F403
from ._cubiso import CubisoError, __doc__  # noqa: F401
