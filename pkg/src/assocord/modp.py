"""Dense linear algebra over F_p with int64 numpy arrays."""

from __future__ import annotations

import numpy as np


def rref(A: np.ndarray, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced row echelon form of A mod p (zero rows dropped) and its pivot columns."""
    M = np.array(A, dtype=np.int64) % p
    if M.ndim == 1:
        M = M.reshape(1, -1)
    rows, cols = M.shape
    piv: list[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.nonzero(M[r:, c])[0]
        if len(nz) == 0:
            continue
        k = r + int(nz[0])
        if k != r:
            M[[r, k]] = M[[k, r]]
        inv = pow(int(M[r, c]), -1, p)
        M[r] = (M[r] * inv) % p
        f = M[:, c].copy()
        f[r] = 0
        nzr = np.nonzero(f)[0]
        if len(nzr):
            M[nzr] = (M[nzr] - np.outer(f[nzr], M[r])) % p
        piv.append(c)
        r += 1
    return M[:r], piv


def rank(A: np.ndarray, p: int) -> int:
    A = np.asarray(A)
    if A.size == 0:
        return 0
    return len(rref(A, p)[1])


def nullspace(A: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of ``{x : A @ x = 0}``."""
    A = np.asarray(A, dtype=np.int64)
    n = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(n, dtype=np.int64)
    R, piv = rref(A, p)
    free = [c for c in range(n) if c not in set(piv)]
    out = np.zeros((len(free), n), dtype=np.int64)
    for i, f in enumerate(free):
        out[i, f] = 1
        for r, c in enumerate(piv):
            out[i, c] = (-R[r, f]) % p
    return out


def left_nullspace(A: np.ndarray, p: int) -> np.ndarray:
    """Basis (as rows) of ``{y : y @ A = 0}``."""
    return nullspace(np.asarray(A).T, p)


class Subspace:
    """A row space over F_p kept in reduced echelon form."""

    def __init__(self, n: int, p: int, rows: np.ndarray | None = None):
        self.n, self.p = n, p
        self.basis = np.zeros((0, n), dtype=np.int64)
        self.pivots: list[int] = []
        if rows is not None and np.asarray(rows).size:
            self.basis, self.pivots = rref(rows, p)

    @property
    def dim(self) -> int:
        return len(self.pivots)

    def reduce(self, v: np.ndarray) -> np.ndarray:
        """Remainder of v (or rows of v) modulo the subspace."""
        v = np.array(v, dtype=np.int64) % self.p
        single = v.ndim == 1
        V = v.reshape(1, -1) if single else v
        for r, c in enumerate(self.pivots):
            f = V[:, c].copy()
            if np.any(f):
                V = (V - np.outer(f, self.basis[r])) % self.p
        return V[0] if single else V

    def contains(self, v: np.ndarray) -> bool:
        return not np.any(self.reduce(v))

    def extend(self, rows: np.ndarray) -> None:
        rows = np.asarray(rows, dtype=np.int64)
        if rows.size == 0:
            return
        self.basis, self.pivots = rref(np.vstack([self.basis, rows.reshape(-1, self.n)]), self.p)

    def complement_units(self) -> list[int]:
        """Indices of unit vectors completing the subspace to the whole space."""
        s = set(self.pivots)
        return [c for c in range(self.n) if c not in s]

    def quotient_map(self) -> tuple[list[int], "callable"]:
        """Complement indices and a projection onto ``F_p^n / self`` in those coordinates."""
        comp = self.complement_units()

        def project(V: np.ndarray) -> np.ndarray:
            return self.reduce(V)[..., comp]

        return comp, project


__all__ = ["rref", "rank", "nullspace", "left_nullspace", "Subspace"]
