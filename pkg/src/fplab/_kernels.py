"""Dense mod-p kernels: row reduction, matmul, codeword weight scans.

Two interchangeable backends compute the same results on int64 arrays:
jit-compiled loops (numba) and vectorized numpy.  The backend is picked
by the FPLAB_BACKEND environment variable ("numba" or "numpy", default
numba when importable) and can be switched at runtime via set_backend,
which is what the benchmark script does.  All arithmetic stays exact:
entries live in [0, p) with p < 2**31, so products fit in int64.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAS_NUMBA = False

_VALID = ("numba", "numpy")
_backend = os.environ.get("FPLAB_BACKEND", "numba" if HAS_NUMBA else "numpy")
if _backend not in _VALID:
    raise ValueError(f"FPLAB_BACKEND must be one of {_VALID}, got {_backend!r}")
if _backend == "numba" and not HAS_NUMBA:
    _backend = "numpy"


def get_backend() -> str:
    return _backend


def set_backend(name: str):
    global _backend
    if name not in _VALID:
        raise ValueError(f"backend must be one of {_VALID}, got {name!r}")
    if name == "numba" and not HAS_NUMBA:
        raise ValueError("numba backend requested but numba is not importable")
    _backend = name


def _as_matrix(a) -> np.ndarray:
    out = np.array(a, dtype=np.int64)
    if out.ndim != 2:
        raise ValueError("expected a 2-d array")
    return out


# ----------------------------------------------------------------------
# scalar-loop implementations (jit targets)


def _rref_loops(A, p):
    n, m = A.shape
    pivots = np.empty(min(n, m), dtype=np.int64)
    r = 0
    for c in range(m):
        pr = -1
        for i in range(r, n):
            if A[i, c] != 0:
                pr = i
                break
        if pr == -1:
            continue
        if pr != r:
            for j in range(m):
                tmp = A[r, j]
                A[r, j] = A[pr, j]
                A[pr, j] = tmp
        inv = 1
        acc = A[r, c] % p
        e = p - 2
        while e > 0:
            if e & 1:
                inv = inv * acc % p
            acc = acc * acc % p
            e >>= 1
        for j in range(c, m):
            A[r, j] = A[r, j] * inv % p
        for i in range(n):
            if i != r and A[i, c] != 0:
                f = A[i, c]
                for j in range(c, m):
                    A[i, j] = (A[i, j] - f * A[r, j]) % p
        pivots[r] = c
        r += 1
        if r == n:
            break
    return A, pivots[:r], r


def _matmul_loops(A, B, p):
    n, k = A.shape
    k2, m = B.shape
    out = np.zeros((n, m), dtype=np.int64)
    for i in range(n):
        for t in range(k):
            a = A[i, t]
            if a == 0:
                continue
            for j in range(m):
                out[i, j] = (out[i, j] + a * B[t, j]) % p
    return out


def _min_block_weight_loops(G, p, block):
    k, n = G.shape
    nblocks = n // block
    msg = np.zeros(k, dtype=np.int64)
    cw = np.zeros(n, dtype=np.int64)
    total = 1
    for _ in range(k):
        total *= p
    best = nblocks + 1
    for _ in range(total - 1):
        j = 0
        while msg[j] == p - 1:
            msg[j] = 0
            for t in range(n):
                cw[t] = (cw[t] + G[j, t]) % p
            j += 1
        msg[j] += 1
        for t in range(n):
            cw[t] = (cw[t] + G[j, t]) % p
        w = 0
        for b in range(nblocks):
            for t in range(b * block, (b + 1) * block):
                if cw[t] != 0:
                    w += 1
                    break
        if w < best:
            best = w
            if best <= 1:
                break
    return best


if HAS_NUMBA:
    _rref_numba = numba.njit(cache=True)(_rref_loops)
    _matmul_numba = numba.njit(cache=True)(_matmul_loops)
    _min_block_weight_numba = numba.njit(cache=True)(_min_block_weight_loops)


# ----------------------------------------------------------------------
# vectorized numpy fallbacks


def _rref_numpy(A, p):
    n, m = A.shape
    pivots = []
    r = 0
    for c in range(m):
        col = A[r:, c]
        nz = np.nonzero(col)[0]
        if nz.size == 0:
            continue
        pr = r + int(nz[0])
        if pr != r:
            A[[r, pr]] = A[[pr, r]]
        A[r] = A[r] * pow(int(A[r, c]), p - 2, p) % p
        f = A[:, c].copy()
        f[r] = 0
        rows = np.nonzero(f)[0]
        if rows.size:
            A[rows] = (A[rows] - f[rows, None] * A[r]) % p
        pivots.append(c)
        r += 1
        if r == n:
            break
    return A, np.array(pivots, dtype=np.int64), r


def _matmul_numpy(A, B, p):
    k = A.shape[1]
    if k == 0:
        return np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    step = max(1, (1 << 62) // max(1, (p - 1) * (p - 1)))
    if k <= step:
        return A @ B % p
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for start in range(0, k, step):
        out += A[:, start : start + step] @ B[start : start + step] % p
    return out % p


def _min_block_weight_numpy(G, p, block):
    k, n = G.shape
    nblocks = n // block
    total = p**k
    radix = p ** np.arange(k, dtype=np.int64)
    best = nblocks + 1
    chunk = 4096
    for start in range(1, total, chunk):
        idx = np.arange(start, min(start + chunk, total), dtype=np.int64)
        msgs = (idx[:, None] // radix) % p
        cws = _matmul_numpy(msgs, G, p)
        w = (cws.reshape(-1, nblocks, block) != 0).any(axis=2).sum(axis=1)
        low = int(w.min())
        if low < best:
            best = low
            if best <= 1:
                break
    return best


# ----------------------------------------------------------------------
# public API


def rref(a, p: int):
    """Reduced row echelon form mod p: returns (R, pivot_columns, rank)."""
    A = _as_matrix(a) % p
    if _backend == "numba":
        R, piv, rank = _rref_numba(A, p)
    else:
        R, piv, rank = _rref_numpy(A, p)
    return R, piv, rank


def rank(a, p: int) -> int:
    return rref(a, p)[2]


def solve(a, b, p: int):
    """Solve A X = B mod p for square invertible A; None when singular."""
    A = _as_matrix(a)
    B = _as_matrix(b)
    n = A.shape[0]
    if A.shape[1] != n or B.shape[0] != n:
        raise ValueError("solve expects a square system")
    aug = np.concatenate([A % p, B % p], axis=1)
    R, piv, rk = rref(aug, p)
    # invertible A means the pivots are exactly the first n columns
    if rk < n or (n and piv[n - 1] >= n):
        return None
    return R[:, n:]


def inv(a, p: int):
    A = _as_matrix(a)
    return solve(A, np.eye(A.shape[0], dtype=np.int64), p)


def matmul(a, b, p: int):
    A = _as_matrix(a) % p
    B = _as_matrix(b) % p
    if A.shape[1] != B.shape[0]:
        raise ValueError("matmul shape mismatch")
    if _backend == "numba":
        return _matmul_numba(A, B, p)
    return _matmul_numpy(A, B, p)


def min_block_weight(g, p: int, block: int) -> int:
    """Minimum number of nonzero length-`block` blocks over all nonzero
    codewords of the row space of g (all p**k messages enumerated)."""
    G = _as_matrix(g) % p
    if block < 1 or G.shape[1] % block:
        raise ValueError("codeword length must split into equal blocks")
    if _backend == "numba":
        return int(_min_block_weight_numba(G, p, block))
    return int(_min_block_weight_numpy(G, p, block))
