from ._elastics import *  # noqa: F401,F403
from ._elastics import Error, NoSolution, NotClosedForm  # noqa: F401
