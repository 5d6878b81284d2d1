"""JIT plumbing for the search kernels.

The bitmask kernels in :mod:`brickmatch._kernels` are compiled with numba by
default.  Setting ``BRICKMATCH_NO_JIT=1`` (or running where numba is not
installed) switches to a pure-Python fallback: the same function bodies run
under the interpreter, which is much slower but handy for debugging and for
benchmarking the compiled path against a reference.
"""

from __future__ import annotations

import os


def _jit_requested() -> bool:
    return os.environ.get("BRICKMATCH_NO_JIT", "").strip().lower() not in (
        "1",
        "true",
        "yes",
    )


JIT_ENABLED = False

if _jit_requested():
    try:
        from numba import njit  # noqa: F401

        JIT_ENABLED = True
    except ImportError:
        JIT_ENABLED = False

if not JIT_ENABLED:

    def njit(*args, **kwargs):
        """Pass-through replacement for :func:`numba.njit`."""
        if args and callable(args[0]):
            return args[0]

        def wrapper(func):
            return func

        return wrapper


def new_memo():
    """Fresh mask -> int64 memo table of the kind the kernels expect."""
    if JIT_ENABLED:
        from numba.core import types
        from numba.typed import Dict

        return Dict.empty(types.int64, types.int64)
    return {}
