from skeinlab._skeinlab import *  # noqa: F401,F403
