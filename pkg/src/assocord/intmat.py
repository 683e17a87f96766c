"""Exact integer matrix routines: Hermite normal forms and triangular inverses.

Row-style Hermite normal form throughout: the row span is the lattice, rows
are upper-echelon with positive pivots and entries above each pivot reduced
into ``[0, pivot)``.

``hnf_mod`` is the workhorse.  It assumes ``D * Z^n`` lies in the row span, so
every entry can be kept reduced modulo ``D``; this keeps int64 arithmetic
exact for the sizes used here.  ``hnf`` is a general fallback for arbitrary
(possibly rank-deficient) inputs.
"""

from __future__ import annotations

from math import gcd

import numpy as np

_SAFE = 1 << 62


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return ``(g, u, v)`` with ``u*a + v*b = g = gcd(a, b) >= 0``."""
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def lcm(a: int, b: int) -> int:
    return a // gcd(a, b) * b if a and b else 0


def as_int_array(a) -> np.ndarray:
    """Convert to int64 when all entries are small, otherwise to an object array."""
    arr = np.asarray(a)
    if arr.dtype == object:
        if arr.size == 0:
            return arr.astype(np.int64)
        m = max(abs(int(x)) for x in arr.flat)
        return arr.astype(np.int64) if m < _SAFE else arr
    return arr.astype(np.int64)


def to_object(a) -> np.ndarray:
    arr = np.asarray(a)
    out = np.empty(arr.size, dtype=object)
    out[:] = [int(x) for x in arr.flat]
    return out.reshape(arr.shape)


def max_abs(a: np.ndarray) -> int:
    if a.size == 0:
        return 0
    if a.dtype == object:
        return max(abs(int(x)) for x in a.flat)
    return int(np.abs(a).max())


def imatmul(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Exact integer product, int64 when the result provably fits."""
    k = a.shape[-1]
    if a.dtype != object and b.dtype != object:
        if k * max_abs(a) * max_abs(b) < _SAFE:
            return a @ b
    return to_object(a) @ to_object(b)


def matmul_mod(a: np.ndarray, b: np.ndarray, m: int) -> np.ndarray:
    """``a @ b mod m`` for arrays with entries already reduced mod m."""
    k = a.shape[-1]
    if k * (m - 1) ** 2 < 2 ** 53:
        return np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64) % m
    if k * (m - 1) ** 2 < _SAFE:
        return (a.astype(np.int64) @ b.astype(np.int64)) % m
    return (to_object(a) @ to_object(b)) % m


# ---------------------------------------------------------------------------
# Hermite normal form modulo a multiple of the determinant

def hnf_mod(rows, D: int) -> np.ndarray:
    """HNF of the lattice spanned by ``rows`` together with ``D * Z^n``.

    The result is an n-by-n upper triangular integer matrix whose pivots divide
    ``D``.  It equals the HNF of ``rows`` alone whenever that span contains
    ``D * Z^n``.
    """
    D = int(D)
    if D <= 0:
        raise ValueError("modulus must be positive")
    A = np.asarray(rows)
    if A.ndim == 1:
        A = A.reshape(1, -1)
    n = A.shape[1]
    big = n * D * D >= _SAFE
    if big:
        W = to_object(A) % D
    else:
        W = (A.astype(np.int64) if A.dtype != object else as_int_array(A).astype(np.int64)) % D
    W = W[np.any(W != 0, axis=1)]
    dtype = object if big else np.int64
    H = np.zeros((n, n), dtype=dtype)
    for j in range(n):
        if W.shape[0]:
            col = W[:, j]
            while True:
                nz = np.nonzero(col)[0]
                if len(nz) <= 1:
                    break
                vals = col[nz]
                p = nz[int(np.argmin(vals))]
                piv = W[p].copy()
                q = col // piv[j]
                q[p] = 0
                W = (W - np.outer(q, piv)) % D
                keep = np.any(W != 0, axis=1)
                W = W[keep]
                col = W[:, j]
            nz = np.nonzero(col)[0]
        else:
            nz = []
        if len(nz) == 0:
            H[j, j] = D
            continue
        p = nz[0]
        row = W[p]
        a = int(row[j])
        g, u, _ = xgcd(a, D)
        new = (row * u) % D
        new[j] = g
        H[j] = new
        extra = (row * (-(D // g))) % D
        extra[j] = 0
        rest = np.delete(W, p, axis=0)
        if np.any(extra != 0):
            rest = np.vstack([rest, extra[None, :]])
        W = rest
    return _reduce_above(H, D)


def _reduce_above(H: np.ndarray, D: int | None = None) -> np.ndarray:
    n = H.shape[0]
    for j in range(1, n):
        piv = H[j, j]
        q = H[:j, j] // piv
        if np.any(q != 0):
            H[:j] -= np.outer(q, H[j])
            if D is not None:
                H[:j, j + 1:] %= D
    return H


# ---------------------------------------------------------------------------
# general Hermite normal form

def hnf(rows, ncols: int | None = None) -> np.ndarray:
    """Row HNF of an arbitrary integer matrix; zero rows are dropped."""
    A = np.asarray(rows)
    if A.ndim == 1:
        A = A.reshape(1, -1)
    n = A.shape[1] if ncols is None else ncols
    if A.size == 0:
        return np.zeros((0, n), dtype=np.int64)
    piv: dict[int, list[int]] = {}
    for r in A.tolist():
        v = [int(x) for x in r]
        while True:
            j = next((k for k, x in enumerate(v) if x), None)
            if j is None:
                break
            if j not in piv:
                if v[j] < 0:
                    v = [-x for x in v]
                piv[j] = v
                break
            w = piv[j]
            a, b = w[j], v[j]
            if b % a == 0:
                q = b // a
                v = [x - q * y for x, y in zip(v, w)]
                continue
            g, s, t = xgcd(a, b)
            nw = [s * x + t * y for x, y in zip(w, v)]
            v = [(b // g) * x - (a // g) * y for x, y in zip(w, v)]
            piv[j] = nw
            _reduce_row_against(piv, j)
    cols = sorted(piv)
    out = [piv[c] for c in cols]
    for i in range(len(out)):
        for k in range(i + 1, len(out)):
            c = cols[k]
            q = out[i][c] // out[k][c]
            if q:
                out[i] = [x - q * y for x, y in zip(out[i], out[k])]
    return as_int_array(np.array(out, dtype=object).reshape(len(out), n))


def _reduce_row_against(piv: dict[int, list[int]], j: int) -> None:
    """Keep the entries of pivot row ``j`` small using later pivots."""
    w = piv[j]
    for c in sorted(k for k in piv if k > j):
        p = piv[c]
        q = w[c] // p[c]
        if q:
            w = [x - q * y for x, y in zip(w, p)]
    piv[j] = w


def pivots(H: np.ndarray) -> list[int]:
    out = []
    for r in H:
        nz = np.nonzero(r)[0]
        out.append(int(nz[0]))
    return out


def content(a) -> int:
    g = 0
    for x in np.asarray(a).flat:
        g = gcd(g, int(x))
        if g == 1:
            return 1
    return g


# ---------------------------------------------------------------------------
# inverses of triangular matrices

def triangular_adjugate(K: np.ndarray) -> tuple[np.ndarray, int]:
    """Return ``(Q, e)`` with ``K^-1 = Q / e``, Q integral and e minimal.

    ``K`` must be square, upper triangular and nonsingular.
    """
    n = K.shape[0]
    Ko = to_object(K)
    X = np.zeros((n, n), dtype=object)
    s = 1
    for i in range(n - 1, -1, -1):
        num = np.zeros(n, dtype=object)
        num[i] = s
        if i + 1 < n:
            num = num - Ko[i, i + 1:] @ X[i + 1:]
        d = int(Ko[i, i])
        g = d
        for x in num:
            g = gcd(g, int(x))
            if g == 1:
                break
        f = d // g
        if f != 1:
            X *= f
            num = num * f
            s *= f
        X[i] = num // d
    # scale is s; reduce by the common content
    g = s
    for x in X.flat:
        g = gcd(g, int(x))
        if g == 1:
            break
    return as_int_array(X // g), s // g


def solve_upper_mod(K: np.ndarray, D: int) -> np.ndarray:
    """Integer matrix ``Y`` with ``K @ Y = D * I`` (requires ``D * K^-1`` integral)."""
    Q, e = triangular_adjugate(K)
    if D % e:
        raise ValueError("D * K^-1 is not integral")
    return as_int_array(to_object(Q) * (D // e))


__all__ = [
    "xgcd", "lcm", "hnf", "hnf_mod", "pivots", "content", "triangular_adjugate",
    "solve_upper_mod", "imatmul", "matmul_mod", "as_int_array", "to_object", "max_abs",
]
