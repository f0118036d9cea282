"""Pure numpy implementations of the hot integer contraction kernels.

All kernels operate on integer coefficient arrays whose last axis indexes
powers of a fixed root of unity modulo x^N - 1, so products are cyclic
convolutions.  Results are exact as long as the dtype does not overflow;
callers pick int64 or object dtype based on coefficient bounds.
"""

from __future__ import annotations

import numpy as np

BACKEND_NAME = "python"


def _circulant(B: np.ndarray) -> np.ndarray:
    """View of B with a trailing (x, y) block: C[..., x, y] = B[..., (y-x) % N]."""
    n = B.shape[-1]
    idx = (np.arange(n)[None, :] - np.arange(n)[:, None]) % n
    return B[..., idx]


def cyc_matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """Matrix product of cyclotomic-coefficient matrices.

    A: (m, k, N), B: (k, r, N) -> (m, r, N), cyclic convolution on the
    coefficient axis.
    """
    Bc = _circulant(B)  # (k, r, x, y)
    return np.einsum("ikx,krxy->iry", A, Bc)


def cyc_weighted_rows(A: np.ndarray, V: np.ndarray) -> np.ndarray:
    """out[a] = sum_b A[a, b] * V[b] as field elements.

    A: (m, m, N), V: (m, N) -> (m, N).
    """
    Vc = _circulant(V)  # (b, x, y)
    return np.einsum("abx,bxy->ay", A, Vc)


def verlinde_contract(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    """out[f, g, h] = sum_k A[f, k] * A[g, k] * B[h, k] as field elements.

    A, B: (m, m, N) -> (m, m, m, N).  This is the fusion-coefficient triple
    contraction; the inner pair product is materialized once and the rest is
    a plain integer matmul.
    """
    m, _, n = A.shape
    Ac = _circulant(A)  # (g, k, x, y)
    pair = np.einsum("fkx,gkxy->fgky", A, Ac)  # (f, g, k, e)
    Bc = _circulant(B)  # (h, k, e, c)
    bmat = Bc.transpose(1, 2, 0, 3).reshape(m * n, m * n)  # rows (k, e), cols (h, c)
    out = pair.reshape(m * m, m * n) @ bmat
    return out.reshape(m, m, m, n)


def fusion_associator_defect(N: np.ndarray) -> np.ndarray:
    """Associativity defect D[f,g,h,x] = (N_f N_g) N_h - N_f (N_g N_h)."""
    left = np.einsum("fge,ehx->fghx", N, N)
    right = np.einsum("ghe,fex->fghx", N, N)
    return left - right
