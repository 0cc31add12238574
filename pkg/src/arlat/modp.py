"""Dense linear algebra over the prime field F_p.

Matrices are int64 numpy arrays with entries in [0, p).  Elimination keeps
intermediate values unreduced where that is safe (|value| stays far below
2**63 for the sizes this package handles) and reduces lazily, which makes the
row updates memory-bound rather than mod-bound.
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np


@lru_cache(maxsize=8)
def inv_table(p: int) -> np.ndarray:
    """Lookup table of multiplicative inverses mod p (index 0 unused)."""
    t = np.zeros(p, dtype=np.int64)
    for a in range(1, p):
        t[a] = pow(a, p - 2, p)
    return t


def asmod(A, p: int) -> np.ndarray:
    return np.asarray(A, dtype=np.int64) % p


def rref(A, p: int):
    """Reduced row echelon form.  Returns (R, pivot_cols)."""
    M = asmod(A, p).copy()
    m, q = M.shape
    invt = inv_table(p)
    piv_cols = []
    r = 0
    for j in range(q):
        if r == m:
            break
        col = M[r:, j] % p
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            M[r:, j] = col
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
        M[r] %= p
        f = int(invt[M[r, j]])
        if f != 1:
            M[r] = (M[r] * f) % p
        others = np.nonzero(M[:, j] % p)[0]
        others = others[others != r]
        if others.size:
            M[others] -= np.outer(M[others, j] % p, M[r])
        piv_cols.append(j)
        r += 1
    return M % p, piv_cols


def rank(A, p: int) -> int:
    return len(rref(A, p)[1])


def kernel(A, p: int) -> np.ndarray:
    """Columns spanning the right nullspace of A over F_p."""
    M = np.asarray(A, dtype=np.int64)
    m, q = M.shape
    R, piv = rref(M, p)
    free = [j for j in range(q) if j not in piv]
    K = np.zeros((q, len(free)), dtype=np.int64)
    for t, j in enumerate(free):
        K[j, t] = 1
        for r, pc in enumerate(piv):
            K[pc, t] = (-R[r, j]) % p
    return K


def solve(A, B, p: int):
    """Particular solution X with A X = B, or None.  B may be a matrix."""
    A = asmod(A, p)
    B = asmod(B, p)
    if B.ndim == 1:
        B = B[:, None]
    m, q = A.shape
    R, piv = rref(np.hstack([A, B]), p)
    # inconsistent iff a pivot lands in the RHS block
    if any(pc >= q for pc in piv):
        return None
    X = np.zeros((q, B.shape[1]), dtype=np.int64)
    for r, pc in enumerate(piv):
        X[pc] = R[r, q:]
    return X


def inv(A, p: int) -> np.ndarray:
    A = asmod(A, p)
    n = A.shape[0]
    R, piv = rref(np.hstack([A, np.eye(n, dtype=np.int64)]), p)
    if len(piv) != n or piv != list(range(n)):
        raise ZeroDivisionError("matrix is singular mod p")
    return R[:, n:]


def echelon_pivots(A, p: int):
    """Pivot structure of A mod p.

    Returns (pivot_rows, pivot_cols) as index arrays of equal length r such
    that A[pivot_rows][:, pivot_cols] is invertible and r = rank(A).
    Elimination runs unreduced; values stay below ~rank * p**2.
    """
    M = asmod(A, p).copy()
    m, q = M.shape
    invt = inv_table(p)
    rowidx = np.arange(m)
    piv_rows = []
    piv_cols = []
    r = 0
    for j in range(q):
        if r == m:
            break
        M[r:, j] %= p
        nz = np.nonzero(M[r:, j])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            M[[r, i]] = M[[i, r]]
            rowidx[[r, i]] = rowidx[[i, r]]
        M[r, j:] %= p
        f = int(invt[M[r, j]])
        if f != 1:
            M[r, j:] = (M[r, j:] * f) % p
        mult = M[r + 1:, j]
        live = np.nonzero(mult)[0]
        if live.size:
            M[r + 1 + live, j:] -= np.outer(mult[live], M[r, j:])
        piv_rows.append(int(rowidx[r]))
        piv_cols.append(j)
        r += 1
    return np.array(piv_rows, dtype=np.intp), np.array(piv_cols, dtype=np.intp)


def matmul(A, B, p: int) -> np.ndarray:
    """A @ B mod p through float64 BLAS; exact while k*p^2 < 2^53."""
    Af = np.asarray(A, dtype=np.float64)
    Bf = np.asarray(B, dtype=np.float64)
    C = Af @ Bf
    return (np.rint(C).astype(np.int64)) % p
