"""Kernel dispatch: the compiled extension when it imports, else pure Python.

Set ``LATFANO_PURE_PYTHON=1`` to force the fallback.  Compiled kernels raise
``OverflowError`` when a 64-bit intermediate would wrap; the call is then
repeated on the arbitrary-precision Python path, so results are always exact.
"""

from __future__ import annotations

import os

from . import _pykernels

_ext = None
if not os.environ.get("LATFANO_PURE_PYTHON"):
    try:
        from . import _ckernels as _ext
    except ImportError:  # extension not built
        _ext = None

BACKEND = _ext.BACKEND if _ext is not None else _pykernels.BACKEND


def _dispatch(name):
    py = getattr(_pykernels, name)
    if _ext is None:
        return py
    fast = getattr(_ext, name)

    def call(*args):
        try:
            return fast(*args)
        except OverflowError:
            return py(*args)

    call.__name__ = name
    call.__doc__ = py.__doc__
    return call


hull = _dispatch("hull")
count_points = _dispatch("count_points")
list_points = _dispatch("list_points")
layer_covered = _dispatch("layer_covered")
symmetry_key = _dispatch("symmetry_key")
