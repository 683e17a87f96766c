"""p-local freeness of a lattice over its associated order.

Everything happens in ``Lambda / p Lambda``.  The radical is found with the
trace-power kernels of Cohen, Ivanyos and Wales.  Freeness is decided via
Nakayama: over the p-completion, M is free over Lambda iff ``M / rad M`` and
``Lambda / rad Lambda`` are isomorphic modules over the semisimple quotient B.
For semisimple modules X, Y that happens iff

    dim Hom(X, X) = dim Hom(X, Y) = dim Hom(Y, Y)

(the difference ``h_XX - 2 h_XY + h_YY`` is a positive definite form in the
multiplicity differences).
"""

from __future__ import annotations

import json
import math
import random
from dataclasses import dataclass, field

import numpy as np

from .group_algebra import AlgebraElement, idempotent, right_mult_matrix
from .groups import Group, GroupError, Subgroup
from .intmat import imatmul, to_object
from .lattices import (GroupLattice, associated_order, equal_at_p, is_ring,
                       lattice_from_generators, right_colon)
from .modp import Subspace, left_nullspace, rank


class AlgebraStructureError(ValueError):
    pass


# ---------------------------------------------------------------------------
# finite algebras

@dataclass
class FiniteAlgebra:
    """An associative algebra over F_p given by structure constants.

    ``table[a, b, :]`` holds the coordinates of ``e_a * e_b``.
    """

    p: int
    table: np.ndarray
    identity: np.ndarray

    @property
    def dim(self) -> int:
        return self.table.shape[0]

    def multiply(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.einsum("a,b,abk->k", x, y, self.table) % self.p

    def left_matrix(self, z: np.ndarray) -> np.ndarray:
        """``L`` with ``v @ L = z * v``."""
        return np.einsum("a,abk->bk", z, self.table) % self.p

    def left_matrices(self, Z: np.ndarray) -> np.ndarray:
        """Stack of ``left_matrix(z)`` for the rows z of Z."""
        n = self.dim
        flat = _fmatmul(np.asarray(Z) % self.p, self.table.reshape(n, n * n), self.p)
        return flat.reshape(-1, n, n)

    def is_associative(self, trials: int = 20, seed: int = 0) -> bool:
        rng = np.random.default_rng(seed)
        for _ in range(trials):
            x, y, z = rng.integers(0, self.p, size=(3, self.dim))
            if np.any(self.multiply(self.multiply(x, y), z) != self.multiply(x, self.multiply(y, z))):
                return False
        return True

    def has_identity(self) -> bool:
        I = np.eye(self.dim, dtype=np.int64)
        L = self.left_matrix(self.identity)
        R = np.einsum("b,abk->ak", self.identity, self.table) % self.p
        return bool(np.all(L == I) and np.all(R == I))


def _fmatmul(a: np.ndarray, b: np.ndarray, p: int) -> np.ndarray:
    """``a @ b mod p`` through float64 BLAS (exact while the sums stay below 2^53)."""
    if a.shape[-1] * (p - 1) ** 2 >= 2 ** 53:
        return (a.astype(np.int64) @ b.astype(np.int64)) % p
    return np.rint(a.astype(np.float64) @ b.astype(np.float64)).astype(np.int64) % p


def _product_rows(L: GroupLattice, N: GroupLattice) -> tuple[np.ndarray, int]:
    """Integer rows U and scale s with ``U[b * rank(L) + a] / s = l_a * n_b``."""
    G = L.group
    KL = to_object(L.basis)
    blocks = [imatmul(KL, to_object(right_mult_matrix(b, G))) for b in N.basis]
    return np.vstack(blocks), L.den * N.den


def action_matrices(order: GroupLattice, M: GroupLattice, p: int) -> np.ndarray:
    """``A[a]`` with ``A[a][b, :]`` the coordinates mod p of ``lambda_a * m_b`` in M."""
    U, s = _product_rows(order, M)
    C = M.coords_mod(U, s, p)
    k, n = order.rank, M.rank
    return C.reshape(n, k, n).transpose(1, 0, 2).copy()


def mod_p_algebra(order: GroupLattice, p: int, identity: AlgebraElement | None = None) -> FiniteAlgebra:
    """Structure constants of ``order / p order`` in its Hermite basis."""
    G = order.group
    one = identity if identity is not None else AlgebraElement.one(G)
    if not order.contains_element(one):
        raise AlgebraStructureError("identity is not in the lattice")
    if not is_ring(order, one):
        raise AlgebraStructureError("lattice is not a ring")
    T = action_matrices(order, order, p)
    idc = order.coords_mod(np.array([one.num], dtype=object), one.den, p)[0]
    return FiniteAlgebra(p, T, idc)


# ---------------------------------------------------------------------------
# radical

def _trace_powers(mats: np.ndarray, p: int, t: int) -> np.ndarray:
    """``Tr(L^(p^t)) / p^t mod p`` for integer lifts of a batch of matrices."""
    m = p ** (t + 1)
    n = mats.shape[-1]
    if n * (m - 1) ** 2 < 2 ** 53:
        X = (mats % m).astype(np.float64)
        for _ in range(t):
            Y = X
            for _ in range(p - 1):
                Y = np.fmod(Y @ X, m)
            X = Y
        tr = np.rint(np.trace(X, axis1=-2, axis2=-1)).astype(np.int64) % m
    else:
        X = to_object(mats % m)
        for _ in range(t):
            Y = X
            for _ in range(p - 1):
                Y = (Y @ X) % m
            X = Y
        tr = np.trace(X, axis1=-2, axis2=-1).astype(np.int64) % m
    pt = p ** t
    if np.any(tr % pt):
        raise AlgebraStructureError("trace form not divisible as expected")
    return (tr // pt) % p


def radical(B: FiniteAlgebra, chunk: int = 16) -> np.ndarray:
    """Basis (rows) of the Jacobson radical of B."""
    p, n = B.p, B.dim
    if n == 0:
        return np.zeros((0, 0), dtype=np.int64)
    top = int(math.floor(math.log(n, p) + 1e-9))
    I = np.eye(n, dtype=np.int64)
    base_tr = np.trace(B.table, axis1=1, axis2=2) % p
    for t in range(top + 1):
        if I.shape[0] == 0:
            break
        k = I.shape[0]
        G = np.zeros((k, n), dtype=np.int64)
        for start in range(0, k, chunk):
            Z = I[start:start + chunk]
            # products a_i * e_j for the chunk
            prods = B.left_matrices(Z)
            if t == 0:
                # the plain trace is linear, so only the basis traces are needed
                G[start:start + len(Z)] = (prods.reshape(-1, n) @ base_tr % p).reshape(len(Z), n)
                continue
            mats = B.left_matrices(prods.reshape(-1, n)).reshape(len(Z), n, n, n)
            G[start:start + len(Z)] = _trace_powers(mats, p, t)
        coeffs = left_nullspace(G, p)
        if coeffs.shape[0] == 0:
            I = np.zeros((0, n), dtype=np.int64)
            break
        I = Subspace(n, p, (coeffs @ I) % p).basis
    return I


def is_nilpotent(B: FiniteAlgebra, x: np.ndarray) -> bool:
    y = x % B.p
    for _ in range(B.dim + 1):
        if not np.any(y):
            return True
        y = B.multiply(y, x)
    return not np.any(y)


def is_two_sided_ideal(B: FiniteAlgebra, rows: np.ndarray) -> bool:
    S = Subspace(B.dim, B.p, rows)
    for r in rows:
        for j in range(B.dim):
            e = np.zeros(B.dim, dtype=np.int64)
            e[j] = 1
            if not (S.contains(B.multiply(r, e)) and S.contains(B.multiply(e, r))):
                return False
    return True


def quotient_algebra(B: FiniteAlgebra, ideal: np.ndarray) -> FiniteAlgebra:
    S = Subspace(B.dim, B.p, ideal)
    comp, proj = S.quotient_map()
    T = B.table[np.ix_(comp, comp)]
    return FiniteAlgebra(B.p, proj(T.reshape(-1, B.dim)).reshape(len(comp), len(comp), len(comp)),
                         proj(B.identity))


# ---------------------------------------------------------------------------
# modules over B and their Hom spaces

def _spin_generators(acts: np.ndarray, p: int) -> list[np.ndarray]:
    """Vectors generating the module ``F_p^d`` under the matrices ``acts`` (which include 1)."""
    d = acts.shape[1]
    W = Subspace(d, p)
    gens = []
    for b in range(d):
        if W.dim == d:
            break
        e = np.zeros(d, dtype=np.int64)
        e[b] = 1
        if W.contains(e):
            continue
        gens.append(e)
        W.extend(acts[:, b, :])
    return gens


def hom_dimension(actsX: np.ndarray, actsY: np.ndarray, p: int) -> int:
    """``dim Hom(X, Y)`` for modules given by matching action matrices (row convention)."""
    n, dx, _ = actsX.shape
    dy = actsY.shape[1]
    if dx == 0 or dy == 0:
        return 0
    gens = _spin_generators(actsX, p)
    k = len(gens)
    R = np.vstack([np.stack([g @ actsX[s] % p for s in range(n)]) for g in gens])  # (k*n, dx)
    rel = left_nullspace(R, p)  # rows c with c @ R = 0, indexed (i, s)
    if rel.shape[0] == 0:
        return k * dy
    C = rel.reshape(-1, k, n)
    # for each relation c and generator i: T = sum_s c_is A_Y(s)
    T = np.einsum("ris,sab->riab", C, actsY) % p  # (r, k, dy, dy)
    W = T.transpose(1, 2, 0, 3).reshape(k * dy, -1)
    return k * dy - rank(W, p)


@dataclass
class FreenessReport:
    lattice: GroupLattice
    order: GroupLattice
    p: int
    radical_dim: int
    hom_dims: tuple[int, int, int]
    free: bool
    witness: AlgebraElement | None = None
    extra: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        d = {
            "lattice": self.lattice.dump(),
            "order": self.order.dump(),
            "p": self.p,
            "radical_dim": self.radical_dim,
            "hom_dims": list(self.hom_dims),
            "verdict": self.free,
        }
        if self.witness is not None:
            d["witness"] = str(self.witness)
        return d

    def to_json(self) -> str:
        return json.dumps(self.as_dict(), indent=2)


def is_free_over_associated_order(M: GroupLattice, p: int, order: GroupLattice | None = None) -> FreenessReport:
    """Decide whether ``M_p`` is free over ``A(M)_p``."""
    M._require_full("freeness test")
    Lam = order if order is not None else associated_order(M)
    B = mod_p_algebra(Lam, p)
    rad = radical(B)
    n = B.dim
    # B / rad as a module over itself
    S = Subspace(n, p, rad)
    compB, projB = S.quotient_map()
    actsB = np.stack([projB(B.table[a][compB]) for a in range(n)])
    # M / (pM + rad M)
    AM = action_matrices(Lam, M, p)
    radM = (np.einsum("ra,abk->rbk", rad, AM) % p).reshape(-1, n) if rad.shape[0] else np.zeros((0, n), np.int64)
    SX = Subspace(n, p, radM)
    compX, projX = SX.quotient_map()
    actsX = np.stack([projX(AM[a][compX]) for a in range(n)])
    hxx = hom_dimension(actsX, actsX, p)
    hxb = hom_dimension(actsX, actsB, p)
    hbb = hom_dimension(actsB, actsB, p)
    free = hxx == hxb == hbb
    return FreenessReport(M, Lam, p, rad.shape[0], (hxx, hxb, hbb), free,
                          extra={"dim_X": len(compX), "dim_B": len(compB)})


# ---------------------------------------------------------------------------
# maximality and hybrid group rings

def maximality_certificate(order: GroupLattice, p: int, identity: AlgebraElement | None = None) -> str:
    """``"maximal"`` when ``order / p order`` is semisimple, ``"inconclusive"`` otherwise."""
    B = mod_p_algebra(order, p, identity)
    return "maximal" if radical(B).shape[0] == 0 else "inconclusive"


def complement_order(G: Group, N: Subgroup) -> tuple[GroupLattice, AlgebraElement]:
    """``(1 - e_N) Z[G]`` and its identity ``1 - e_N``."""
    f = AlgebraElement.one(G) - idempotent(N)
    return lattice_from_generators([f], "ZG"), f


def hybrid_check(G: Group, N: Subgroup, p: int) -> bool:
    if N.parent is not G:
        raise GroupError("N is not a subgroup of G")
    if not N.is_normal():
        raise GroupError("N is not normal in G")
    if N.order % p == 0:
        return False
    if N.order == G.order:
        return G.order % p != 0
    L, f = complement_order(G, N)
    return maximality_certificate(L, p, f) == "maximal"


# ---------------------------------------------------------------------------
# randomized isomorphism search

@dataclass
class IsoResult:
    isomorphic: bool | None
    witness: AlgebraElement | None
    attempts: int
    reason: str

    def label(self) -> str:
        if self.isomorphic:
            return "isomorphic"
        if self.isomorphic is False:
            return "not-isomorphic"
        return "not-found (inconclusive)"


def _image_lattice(M: GroupLattice, x: AlgebraElement) -> GroupLattice:
    rows = imatmul(to_object(M.basis), to_object(right_mult_matrix(np.array(x.num, dtype=object), M.group)))
    return GroupLattice(M.group, rows, M.den * x.den)


def _unit_mod_p(M: GroupLattice, N: GroupLattice, x: AlgebraElement, p: int) -> bool:
    R = right_mult_matrix(np.array(x.num, dtype=object), M.group)
    U = imatmul(to_object(M.basis), to_object(R))
    C = N.coords_mod(U, M.den * x.den, p)
    return rank(C, p) == N.rank


def randomized_iso_search(M: GroupLattice, N: GroupLattice, p: int, attempts: int = 10_000,
                          seed: int = 0) -> IsoResult:
    """Look for x with ``M x = N`` after localizing at p."""
    AM, AN = associated_order(M), associated_order(N)
    if not equal_at_p(AM, AN, p):
        return IsoResult(False, None, 0, "associated orders differ at p")
    G = M.group
    H = right_colon(N, M)
    basis = to_object(H.basis)
    rng = random.Random(seed)
    candidates = [AlgebraElement.one(G)]
    tried = 0
    while tried < attempts:
        if candidates:
            x = candidates.pop()
            if not H.contains_element(x):
                continue
        else:
            coeffs = np.array([rng.randrange(p) for _ in range(H.rank)], dtype=object)
            x = AlgebraElement(G, (coeffs @ basis).tolist(), H.den)
        tried += 1
        if not any(x.num):
            continue
        if _unit_mod_p(M, N, x, p) and equal_at_p(_image_lattice(M, x), N, p):
            return IsoResult(True, x, tried, "witness verified exactly")
    return IsoResult(None, None, tried, "no witness within the attempt budget")


__all__ = [
    "FiniteAlgebra", "FreenessReport", "IsoResult", "mod_p_algebra", "radical", "is_nilpotent",
    "is_two_sided_ideal", "quotient_algebra", "hom_dimension", "is_free_over_associated_order",
    "maximality_certificate", "hybrid_check", "complement_order", "randomized_iso_search",
    "action_matrices", "AlgebraStructureError",
]

