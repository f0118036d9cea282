"""Backend selection for the integer contraction kernels.

Imports the compiled Cython kernels when the extension was built, otherwise
falls back to the numpy implementations.  Either backend computes exactly
the same integers; the compiled one only exists for speed.  Set
ZMODULAR_FORCE_PYTHON=1 to skip the compiled module.

The compiled kernels require int64 inputs; `dispatch` routes object-dtype
arrays (arbitrary-precision coefficients) to the numpy backend, which
handles them transparently.
"""

from __future__ import annotations

import os

import numpy as np

from . import pykernels

if os.environ.get("ZMODULAR_FORCE_PYTHON"):
    _impl = pykernels
else:
    try:
        from . import _kernels as _impl  # type: ignore[attr-defined]
    except ImportError:
        _impl = pykernels

BACKEND = _impl.BACKEND_NAME


def _pick(arrays) -> object:
    if _impl is pykernels:
        return pykernels
    if any(a.dtype != np.int64 for a in arrays):
        return pykernels
    return _impl


def cyc_matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return np.asarray(_pick([A, B]).cyc_matmul(A, B))


def cyc_weighted_rows(A: np.ndarray, V: np.ndarray) -> np.ndarray:
    return np.asarray(_pick([A, V]).cyc_weighted_rows(A, V))


def verlinde_contract(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return np.asarray(_pick([A, B]).verlinde_contract(A, B))


def fusion_associator_defect(N: np.ndarray) -> np.ndarray:
    return np.asarray(_pick([N]).fusion_associator_defect(N))
