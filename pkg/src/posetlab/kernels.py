"""Flow-kernel backend selection.

The compiled extension (posetlab._kernels) is preferred when importable;
POSETLAB_PURE=1 forces the pure-Python backend. Both expose the same
dinic/ssp functions with identical semantics. Calls whose magnitudes could
overflow 64-bit arithmetic route to the pure backend regardless, so results
are exact for any Python integers.
"""

import os

from . import _kernels_py

_impl = _kernels_py
backend = "pure"
if os.environ.get("POSETLAB_PURE") != "1":
    try:
        from . import _kernels as _compiled  # type: ignore[attr-defined]
    except ImportError:
        pass
    else:
        _impl = _compiled
        backend = "compiled"

_SAFE_CAP = 1 << 40
_SAFE_COST = 1 << 20
_SAFE_NODES = 1 << 20


def dinic(n, us, vs, caps, s, t):
    if _impl is not _kernels_py and (
        n > _SAFE_NODES or any(c > _SAFE_CAP for c in caps)
    ):
        return _kernels_py.dinic(n, us, vs, caps, s, t)
    return _impl.dinic(n, us, vs, caps, s, t)


def ssp(n, us, vs, caps, costs, s, t, max_units, stop_geq, use_stop):
    if _impl is not _kernels_py and (
        n > _SAFE_NODES
        or max_units > _SAFE_CAP
        or abs(stop_geq) > _SAFE_COST
        or any(c > _SAFE_CAP for c in caps)
        or any(abs(c) > _SAFE_COST for c in costs)
    ):
        return _kernels_py.ssp(n, us, vs, caps, costs, s, t, max_units, stop_geq, use_stop)
    return _impl.ssp(n, us, vs, caps, costs, s, t, max_units, stop_geq, use_stop)
