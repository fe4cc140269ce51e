from ._hallway import *  # noqa: F401,F403
from ._hallway import __doc__  # noqa: F401
