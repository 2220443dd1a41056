"""Backend selection for the hot scan kernels.

At import time the compiled extension (ringua._fastkernels, built from
_fastkernels.pyx) is preferred; the pure-Python twin (_purekernels) is the
fallback. Set RINGUA_PURE=1 to force the pure backend. Both backends share
the contracts documented in _purekernels and return identical results.

The compiled kernels take int32 C-contiguous tables and uint64 bitmasks, so
carriers larger than 64 elements are routed to the pure backend (the default
enumeration budget is 64 anyway).
"""

from __future__ import annotations

import os

from . import _purekernels as _pure

_fast = None
if os.environ.get("RINGUA_PURE", "") in ("", "0"):
    try:
        from . import _fastkernels as _fast  # type: ignore[no-redef]
    except ImportError:
        _fast = None

BACKEND = "compiled" if _fast is not None else "pure"

if _fast is not None:
    import numpy as _np

    def _table(t):
        return _np.ascontiguousarray(t, dtype=_np.int32)


def first_noncommutative(table):
    if _fast is not None:
        return _fast.first_noncommutative(_table(table))
    return _pure.first_noncommutative(table)


def first_nonassociative(table):
    if _fast is not None:
        return _fast.first_nonassociative(_table(table))
    return _pure.first_nonassociative(table)


def first_left_distrib_violation(add, mul):
    if _fast is not None:
        return _fast.first_left_distrib_violation(_table(add), _table(mul))
    return _pure.first_left_distrib_violation(add, mul)


def first_right_distrib_violation(add, mul):
    if _fast is not None:
        return _fast.first_right_distrib_violation(_table(add), _table(mul))
    return _pure.first_right_distrib_violation(add, mul)


def close_under_add(add, mask):
    if _fast is not None and len(add) <= 64:
        return _fast.close_under_add(_table(add), mask)
    return _pure.close_under_add(add, mask)


def additive_subgroups(add, zero):
    if _fast is not None and len(add) <= 64:
        return _fast.additive_subgroups(_table(add), zero)
    return _pure.additive_subgroups(add, zero)


def absorption_witness(mul, mask, side):
    if _fast is not None and len(mul) <= 64:
        return _fast.absorption_witness(_table(mul), mask, side)
    return _pure.absorption_witness(mul, mask, side)


def filter_absorbing(mul, masks, side):
    if _fast is not None and len(mul) <= 64:
        arr = _np.asarray(list(masks), dtype=_np.uint64)
        if arr.size == 0:
            return []
        return _fast.filter_absorbing(_table(mul), arr, side)
    return _pure.filter_absorbing(mul, masks, side)
