from ._easyq import *  # noqa: F401,F403
