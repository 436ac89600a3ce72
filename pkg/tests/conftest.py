import os
import sys

# allow running the suite from a fresh checkout without installing
SRC = os.path.join(os.path.dirname(__file__), os.pardir, "src")
if os.path.isdir(SRC) and SRC not in sys.path:
    try:
        import trefoil  # noqa: F401
    except ImportError:
        sys.path.insert(0, SRC)
