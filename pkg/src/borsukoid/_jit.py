"""Numba toggle.

Set ``BORSUKOID_NUMBA=0`` to run every kernel as plain Python/numpy. The
flag is read once at import time.
"""

import os

_FLAG = os.environ.get("BORSUKOID_NUMBA", "1").strip().lower()

try:
    import numba
except ImportError:  # pragma: no cover
    numba = None

USE_NUMBA = numba is not None and _FLAG not in ("0", "false", "no", "off")


def njit(*args, **kwargs):
    """``numba.njit`` when enabled, otherwise the identity decorator."""
    if USE_NUMBA:
        kwargs.setdefault("cache", True)
        return numba.njit(*args, **kwargs)
    if len(args) == 1 and callable(args[0]) and not kwargs:
        return args[0]
    return lambda f: f


def py_func(f):
    """The uncompiled Python body of a kernel."""
    return getattr(f, "py_func", f)
