"""Backend selection for the hot loops.

The compiled module is used when it was built; otherwise the pure-Python
twin.  Inputs wider than 64 bits always go to the Python code.
"""

from __future__ import annotations

from . import _pykernels

try:
    from . import _ckernels
except ImportError:  # extension not built
    _ckernels = None

BACKEND = "cython" if _ckernels is not None else "python"
_impl = _ckernels if _ckernels is not None else _pykernels

_LIMIT = 64


def necklace_walk(n, k, vertex_orders, start):
    if k > _LIMIT:
        return _pykernels.necklace_walk(n, k, vertex_orders, start)
    return _impl.necklace_walk(n, k, vertex_orders, start)


def independent(vertex_adj, jmask, k):
    if k > _LIMIT or len(vertex_adj) > _LIMIT:
        return _pykernels.independent(vertex_adj, jmask, k)
    return _impl.independent(vertex_adj, jmask, k)


def bases_masks(vertex_adj, n, k):
    if k > _LIMIT or n >= _LIMIT:
        return _pykernels.bases_masks(vertex_adj, n, k)
    return _impl.bases_masks(vertex_adj, n, k)


def perfect_matchings(allowed):
    if len(allowed) > _LIMIT:
        return _pykernels.perfect_matchings(allowed)
    return _impl.perfect_matchings(allowed)


def available_backends() -> dict:
    """Name -> module for every backend importable in this build."""
    out = {"python": _pykernels}
    if _ckernels is not None:
        out["cython"] = _ckernels
    return out
