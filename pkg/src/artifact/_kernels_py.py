"""Pure-Python (numpy) versions of the hot integer kernels.

These mirror ``_kernels.pyx`` exactly and are used when the compiled
extension is unavailable or disabled with ``ARTIFACT_PURE_PYTHON=1``.
"""

import numpy as np


def form_doubled(li, lc, ri, rc):
    """Return -sum_{a,b} lc[a] rc[b] |li[a] - ri[b]|.

    This is twice the pairing of two weights written in the Lambda basis.
    """
    li = np.asarray(li, dtype=np.int64)
    ri = np.asarray(ri, dtype=np.int64)
    lc = np.asarray(lc, dtype=np.int64)
    rc = np.asarray(rc, dtype=np.int64)
    if li.size == 0 or ri.size == 0:
        return 0
    dist = np.abs(li[:, None] - ri[None, :])
    return int(-(lc[:, None] * rc[None, :] * dist).sum())


def mutate_exchange(B, k):
    """Mutate a square integer exchange matrix at position k."""
    B = np.asarray(B, dtype=np.int64)
    col = B[:, k]
    row = B[k, :]
    sign = np.where(col < 0, -1, 1)
    out = B + sign[:, None] * np.maximum(np.outer(col, row), 0)
    out[k, :] = -row
    out[:, k] = -col
    return out


def mutate_lambda(L, B, k):
    """Mutate a skew-symmetric commutation matrix L at k using column k of B."""
    L = np.asarray(L, dtype=np.int64)
    B = np.asarray(B, dtype=np.int64)
    v = np.maximum(0, -B[:, k])
    out = L.copy()
    row = -L[k, :] + v @ L
    col = -L[:, k] + L @ v
    out[k, :] = row
    out[:, k] = col
    out[k, k] = L[k, k]
    return out
