"""Kernel backend selection: compiled extension if available, numpy otherwise.

Set ``SYLOWSCOPE_PURE=1`` to force the pure-python backend.
"""

from __future__ import annotations

import os

from . import _kern_py

if os.environ.get("SYLOWSCOPE_PURE") == "1":
    _impl = _kern_py
else:
    try:
        from . import _kern_c as _impl  # type: ignore[no-redef]
    except ImportError:
        _impl = _kern_py

BACKEND = _impl.BACKEND

bfs_closure = _impl.bfs_closure
lookup_rows = _impl.lookup_rows
pack_keys = _impl.pack_keys
row_orders = _impl.row_orders
orbit_partition = _impl.orbit_partition


def implementations():
    """Both backends, for benchmarks and cross-checking tests."""
    impls = {"python": _kern_py}
    try:
        from . import _kern_c

        impls["cython"] = _kern_c
    except ImportError:
        pass
    return impls
