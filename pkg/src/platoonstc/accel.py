"""Optional numba acceleration.

Every hot kernel in this package is decorated with :func:`maybe_njit`.  When
numba is importable and the environment variable ``PLATOONSTC_DISABLE_JIT`` is
unset (or set to ``0``/``false``/empty), kernels are compiled with
``numba.njit(cache=True)``.  Otherwise the decorator is the identity and the
same functions run as plain Python/numpy -- much slower, but bit-identical in
structure and handy for debugging or for machines without a working numba.

The selection happens once at import time so that a single process never mixes
the two paths.
"""

import os

_flag = os.environ.get("PLATOONSTC_DISABLE_JIT", "").strip().lower()
_disabled = _flag not in ("", "0", "false", "no")

try:
    if _disabled:
        raise ImportError("jit disabled by PLATOONSTC_DISABLE_JIT")
    from numba import njit as _njit

    HAS_JIT = True

    def maybe_njit(func):
        return _njit(cache=True)(func)

except ImportError:
    HAS_JIT = False

    def maybe_njit(func):
        return func
