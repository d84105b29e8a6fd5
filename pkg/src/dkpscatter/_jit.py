"""Optional numba acceleration.

Kernels in this package are written as plain scalar Python and decorated with
:func:`njit` from this module.  When numba is importable and the environment
variable ``DKP_DISABLE_JIT`` is unset (or set to something falsy), that is the
real ``numba.njit``.  Otherwise it degrades to an identity decorator and the
same source runs as ordinary Python.

The flag is read once at import time; set it before importing the package.
"""

from __future__ import annotations

import os

__all__ = ["njit", "JIT_ENABLED"]


def _jit_requested() -> bool:
    return os.environ.get("DKP_DISABLE_JIT", "").strip().lower() not in (
        "1", "true", "yes", "on",
    )


JIT_ENABLED = False
if _jit_requested():
    try:
        from numba import njit as _numba_njit
    except ImportError:
        _numba_njit = None
    if _numba_njit is not None:
        JIT_ENABLED = True


if JIT_ENABLED:
    def njit(*args, **kwargs):
        kwargs.setdefault("cache", True)
        return _numba_njit(*args, **kwargs)
else:
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def _decorate(func):
            return func

        return _decorate
