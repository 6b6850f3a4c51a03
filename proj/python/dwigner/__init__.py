"""Discrete Wigner functions over GF(2^n) phase space."""

try:
    from ._core import *  # noqa: F401,F403
    from ._core import __version__  # noqa: F401
except ImportError:  # running from a build tree: locate the extension dir
    import os
    import sys

    _module_dir = os.environ.get("DWIGNER_MODULE_DIR")
    if not _module_dir:
        raise
    sys.path.insert(0, _module_dir)
    from _core import *  # noqa: F401,F403
    from _core import __version__  # noqa: F401
