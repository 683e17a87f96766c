"""Z-lattices in Q[G] with canonical Hermite bases.

A lattice is ``(1/den) * rowspan(basis)`` where ``basis`` is an integer matrix
in row Hermite normal form and ``den`` is as small as possible.  Two lattices
are equal exactly when their ``(basis, den)`` pairs agree.

Full lattices carry an *exponent* ``c``, the least positive integer with
``c * Z[G]`` contained in the lattice.  Every operation below uses it to pick
a modulus ``D`` for :func:`hnf_mod`, which keeps the arithmetic in machine
integers.
"""

from __future__ import annotations

from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Iterable, Sequence

import numpy as np

from .group_algebra import AlgebraElement, left_mult_matrix, right_mult_matrix, trace_element
from .groups import Group, Subgroup
from .intmat import (as_int_array, content, hnf, hnf_mod, imatmul, lcm, matmul_mod,
                     to_object, triangular_adjugate)


class LatticeError(ValueError):
    pass


def _vp(x: int, p: int) -> int:
    x = abs(int(x))
    if x == 0:
        raise ValueError("valuation of zero")
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def _mod(a: np.ndarray, m: int) -> np.ndarray:
    """Reduce an integer array mod m, returning int64 when m is small."""
    if m < 1 << 62:
        if a.dtype == object:
            return (a % m).astype(np.int64)
        return a % m
    return to_object(a) % m


def _bareiss_det(A: np.ndarray) -> int:
    M = [[int(x) for x in row] for row in A]
    n = len(M)
    sign, prev = 1, 1
    for k in range(n - 1):
        if M[k][k] == 0:
            for r in range(k + 1, n):
                if M[r][k]:
                    M[k], M[r] = M[r], M[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                M[i][j] = (M[i][j] * M[k][k] - M[i][k] * M[k][j]) // prev
        prev = M[k][k]
    return sign * M[-1][-1]


def _independent_rows(A: np.ndarray) -> list[int]:
    """Indices of a maximal set of linearly independent rows (rank over Q, mod a large prime)."""
    P = 2_147_483_629
    W = _mod(to_object(A), P).astype(object)
    rows, basis = [], []
    pivcols: list[int] = []
    for i, r in enumerate(W):
        v = r.copy()
        for (j, b) in zip(pivcols, basis):
            if v[j]:
                v = (v - v[j] * b) % P
        nz = np.nonzero(v)[0]
        if len(nz):
            j = int(nz[0])
            inv = pow(int(v[j]), -1, P)
            basis.append((v * inv) % P)
            pivcols.append(j)
            rows.append(i)
    return rows


def canonical_rows(rows: np.ndarray, D: int | None = None) -> np.ndarray:
    """HNF of the integer row span; ``D`` may be given when ``D*Z^n`` lies in it."""
    rows = np.asarray(rows)
    if rows.ndim == 1:
        rows = rows.reshape(1, -1)
    n = rows.shape[1]
    if D is not None:
        return as_int_array(hnf_mod(rows, D))
    idx = _independent_rows(rows)
    if len(idx) == n:
        det = abs(_bareiss_det(rows[idx]))
        return as_int_array(hnf_mod(rows, det))
    return hnf(rows, n)


class GroupLattice:
    """``(1/den) * rowspan(basis)`` inside Q[G]."""

    def __init__(self, group: Group, basis: np.ndarray, den: int = 1, *, _canonical: bool = False,
                 modulus: int | None = None):
        basis = np.asarray(basis)
        if basis.ndim == 1:
            basis = basis.reshape(1, -1)
        if basis.shape[1] != group.order:
            raise LatticeError("basis width does not match the group order")
        den = int(den)
        if den <= 0:
            raise LatticeError("denominator must be positive")
        if not _canonical:
            basis = canonical_rows(basis, modulus)
        g = gcd(content(basis), den) if basis.size else den
        if g > 1:
            basis = as_int_array(to_object(basis) // g)
            den //= g
        self.group = group
        self.basis = as_int_array(basis)
        self.den = den

    # basic data ---------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.group.order

    @property
    def rank(self) -> int:
        return self.basis.shape[0]

    @property
    def is_full(self) -> bool:
        return self.rank == self.n

    def _require_full(self, what: str) -> None:
        if not self.is_full:
            raise LatticeError(f"{what} needs a full lattice (rank {self.rank} < {self.n})")

    @cached_property
    def pivots(self) -> list[int]:
        return [int(np.nonzero(r)[0][0]) for r in self.basis]

    @cached_property
    def _inverse(self) -> tuple[np.ndarray, int]:
        """``(Q, e)`` with ``basis[:, pivots]^-1 = Q / e``."""
        return triangular_adjugate(self.basis[:, self.pivots])

    @cached_property
    def exponent(self) -> int:
        """Least c > 0 with ``c * Z[G]`` inside the lattice."""
        self._require_full("exponent")
        _, e = self._inverse
        return e // gcd(e, self.den)

    @cached_property
    def scaled_inverse(self) -> np.ndarray:
        """``c * den * basis^-1``, an integer matrix."""
        Q, e = self._inverse
        f = self.exponent * self.den // e
        return as_int_array(to_object(Q) * f)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, GroupLattice) and other.group is self.group
                and other.den == self.den and other.basis.shape == self.basis.shape
                and bool(np.all(other.basis == self.basis)))

    def __hash__(self) -> int:
        return hash((id(self.group), self.den, self.basis.tobytes() if self.basis.dtype != object
                     else tuple(self.basis.flat)))

    def __repr__(self) -> str:
        return f"GroupLattice({self.group.name or '?'}, rank={self.rank}, den={self.den})"

    def dump(self) -> str:
        """Canonical text form: the denominator, then one HNF row per line."""
        lines = [str(self.den)]
        lines += [" ".join(str(int(x)) for x in r) for r in self.basis]
        return "\n".join(lines) + "\n"

    @classmethod
    def parse_dump(cls, group: Group, text: str) -> "GroupLattice":
        lines = [ln for ln in text.strip().splitlines() if ln.strip()]
        den = int(lines[0])
        rows = [[int(x) for x in ln.split()] for ln in lines[1:]]
        return cls(group, np.array(rows, dtype=object), den)

    def elements(self) -> list[AlgebraElement]:
        return [AlgebraElement(self.group, r, self.den) for r in self.basis.tolist()]

    @cached_property
    def covolume(self) -> Fraction:
        """Index-style volume ``prod(diag) / den^n``; relative indices are ratios of these."""
        self._require_full("covolume")
        prod = 1
        for i in range(self.n):
            prod *= int(self.basis[i, i])
        return Fraction(prod, self.den ** self.n)

    # membership ---------------------------------------------------------------

    def coordinates(self, num: Sequence[int], den: int = 1) -> list[Fraction] | None:
        """Coordinates of ``num/den`` in the basis, or None if outside the Q-span."""
        Q, e = self._inverse
        u = to_object(np.asarray(num))
        c = (u[self.pivots] @ to_object(Q)) * self.den
        coords = [Fraction(int(x), den * e) for x in c]
        # rebuild and compare (needed for rank-deficient lattices)
        if not self.is_full:
            back = [sum((coords[i] * int(self.basis[i, j]) for i in range(self.rank)), Fraction(0))
                    / self.den for j in range(self.n)]
            if back != [Fraction(int(x), den) for x in u]:
                return None
        return coords

    def contains_element(self, x: AlgebraElement) -> bool:
        if x.group is not self.group:
            raise LatticeError("element from another group algebra")
        c = self.coordinates(x.num, x.den)
        return c is not None and all(v.denominator == 1 for v in c)

    def __contains__(self, x: AlgebraElement) -> bool:
        return self.contains_element(x)

    def contains(self, other: "GroupLattice") -> bool:
        """``other`` is a sublattice of ``self``."""
        if other.group is not self.group:
            raise LatticeError("lattices from different groups")
        if self.is_full:
            Q, e = self._inverse
            m = other.den * e
            A = _mod(to_object(other.basis)[:, self.pivots] * self.den, m)
            return bool(np.all(matmul_mod(A, _mod(Q, m), m) == 0))
        return all(self.contains_element(x) for x in other.elements())

    def coords_mod(self, U: np.ndarray, s: int, p: int) -> np.ndarray:
        """Coordinates mod p of the rows of ``U/s`` (which must lie in the lattice)."""
        Q, e = self._inverse
        m = p * s * e
        A = _mod(to_object(np.asarray(U))[:, self.pivots] * self.den, m)
        X = matmul_mod(A, _mod(Q, m), m)
        se = s * e
        if np.any(X % se):
            raise LatticeError("vectors do not lie in the lattice")
        return (X // se) % p

    # arithmetic ---------------------------------------------------------------

    def scale(self, c: Fraction | int) -> "GroupLattice":
        c = Fraction(c)
        if c == 0:
            raise LatticeError("scaling by zero")
        a, b = abs(c.numerator), c.denominator
        return GroupLattice(self.group, to_object(self.basis) * a, self.den * b, _canonical=True)

    def __add__(self, other: "GroupLattice") -> "GroupLattice":
        return lattice_sum(self, other)

    def __mul__(self, other: "GroupLattice") -> "GroupLattice":
        return product_lattice(self, other)

    def conjugate(self, g: int) -> "GroupLattice":
        """``g L g^-1``."""
        G = self.group
        return self.permute([G.conjugate_index(g, k) for k in range(G.order)])

    def permute(self, perm: Sequence[int]) -> "GroupLattice":
        """Image under the coordinate permutation sending basis element k to ``perm[k]``."""
        rows = np.zeros_like(to_object(self.basis))
        rows[:, np.asarray(perm, dtype=np.int64)] = to_object(self.basis)
        mod = self.den * self.exponent if self.is_full else None
        return GroupLattice(self.group, rows, self.den, modulus=mod)

    def dual(self) -> "GroupLattice":
        """``{x : x . l in Z for all l}`` for the standard coordinate pairing."""
        self._require_full("dual")
        c = self.exponent
        Y = self.scaled_inverse
        return GroupLattice(self.group, Y.T, c, modulus=c * self.den)


# ---------------------------------------------------------------------------
# constructors

def lattice_from_rows(G: Group, rows, den: int = 1, modulus: int | None = None) -> GroupLattice:
    return GroupLattice(G, np.asarray(rows), den, modulus=modulus)


def group_ring(G: Group) -> GroupLattice:
    return GroupLattice(G, np.eye(G.order, dtype=np.int64), 1, _canonical=True)


def _common(gens: Sequence[AlgebraElement]) -> tuple[int, list[np.ndarray]]:
    d = 1
    for x in gens:
        d = lcm(d, x.den)
    return d, [to_object(np.array(x.num, dtype=object)) * (d // x.den) for x in gens]


def lattice_from_generators(gens: Sequence[AlgebraElement], module: str = "Z",
                            modulus: int | None = None) -> GroupLattice:
    """Z-span (``module='Z'``) or Z[G]-span (``module='ZG'``) of ``gens``."""
    gens = list(gens)
    if not gens:
        raise LatticeError("empty generator list")
    G = gens[0].group
    if any(x.group is not G for x in gens):
        raise LatticeError("generators from different group algebras")
    d, vecs = _common(gens)
    if module in ("Z",):
        rows = np.array(vecs, dtype=object).reshape(len(vecs), G.order)
    elif module in ("ZG", "Z[G]"):
        rows = np.vstack([v[G.ldiv] for v in vecs])
    else:
        raise LatticeError(f"unknown module kind {module!r}")
    return GroupLattice(G, rows, d, modulus=modulus)


def lattice_sum(M: GroupLattice, N: GroupLattice) -> GroupLattice:
    return lattice_sum_many([M, N])


def lattice_sum_many(lats: Sequence[GroupLattice]) -> GroupLattice:
    lats = list(lats)
    G = lats[0].group
    if any(L.group is not G for L in lats):
        raise LatticeError("lattices from different groups")
    d = 1
    for L in lats:
        d = lcm(d, L.den)
    rows = np.vstack([to_object(L.basis) * (d // L.den) for L in lats])
    mod = None
    full = [L for L in lats if L.is_full]
    if full:
        c = 0
        for L in full:
            c = gcd(c, L.exponent)
        mod = d * c
    return GroupLattice(G, rows, d, modulus=mod)


def product_lattice(M: GroupLattice, N: GroupLattice) -> GroupLattice:
    """Z-span of all products ``m * n`` of basis elements."""
    G = M.group
    if N.group is not G:
        raise LatticeError("lattices from different groups")
    mod = None
    if M.is_full and N.is_full:
        mod = M.den * N.den * M.exponent * N.exponent
    blocks = []
    for b in N.basis:
        R = right_mult_matrix(b, G)
        if mod is not None:
            blocks.append(matmul_mod(_mod(M.basis, mod), _mod(R, mod), mod))
        else:
            blocks.append(imatmul(to_object(M.basis), to_object(R)))
    return GroupLattice(G, np.vstack(blocks), M.den * N.den, modulus=mod)


def _colon(M: GroupLattice, N: GroupLattice, side: str) -> GroupLattice:
    M._require_full("colon")
    N._require_full("colon")
    G = M.group
    if N.group is not G:
        raise LatticeError("lattices from different groups")
    cM, cN = M.exponent, N.exponent
    D = N.den * cM * cN * M.den
    QM = _mod(M.scaled_inverse, D)
    KN = _mod(N.basis, D)
    blocks = []
    for b in KN:
        T = right_mult_matrix(b, G) if side == "left" else left_mult_matrix(b, G)
        C = matmul_mod(T, QM, D)
        blocks.append(C.T)
    W = hnf_mod(np.vstack(blocks), D)
    Qw, ew = triangular_adjugate(W)
    Y = to_object(Qw) * (D // ew)
    return GroupLattice(G, Y.T, cN * M.den, modulus=D)


def colon(M: GroupLattice, N: GroupLattice) -> GroupLattice:
    """``{x in Q[G] : x N inside M}``."""
    return _colon(M, N, "left")


def right_colon(M: GroupLattice, N: GroupLattice) -> GroupLattice:
    """``{x in Q[G] : N x inside M}``."""
    return _colon(M, N, "right")


def associated_order(M: GroupLattice) -> GroupLattice:
    """The left order ``{x : x M inside M}``."""
    return colon(M, M)


def right_multiplier_order(M: GroupLattice) -> GroupLattice:
    """The right order ``{x : M x inside M}``."""
    return right_colon(M, M)


def intersection(*lats: GroupLattice) -> GroupLattice:
    if len(lats) == 1 and not isinstance(lats[0], GroupLattice):
        lats = tuple(lats[0])
    if len(lats) == 1:
        return lats[0]
    for L in lats:
        L._require_full("intersection")
    return lattice_sum_many([L.dual() for L in lats]).dual()


def is_ring(L: GroupLattice, identity: AlgebraElement | None = None) -> bool:
    """Whether L contains ``identity`` (default 1) and is closed under products."""
    G = L.group
    one = identity if identity is not None else AlgebraElement.one(G)
    if not L.contains_element(one):
        return False
    if not L.is_full:
        P = product_lattice(L, L)
        return L.contains(P)
    Q, e = L._inverse
    d = L.den
    m = d * e
    Km = _mod(L.basis, m)
    Qm = _mod(Q, m)
    for b in Km:
        prod = matmul_mod(Km, right_mult_matrix(b, G), m)
        if np.any(matmul_mod(prod, Qm, m)):
            return False
    return True


def index_valuation(M: GroupLattice, N: GroupLattice, p: int) -> int:
    """``v_p`` of the generalized index ``[M : N] = covol(N) / covol(M)``."""
    r = N.covolume / M.covolume
    return _vp(r.numerator, p) - _vp(r.denominator, p) if r.numerator % p == 0 or r.denominator % p == 0 else 0


def equal_at_p(M: GroupLattice, N: GroupLattice, p: int) -> bool:
    """Whether M and N agree after localizing at p."""
    I = intersection(M, N)
    return index_valuation(M, I, p) == 0 and index_valuation(N, I, p) == 0


def lattice_predicates(M: GroupLattice, N: GroupLattice, p: int | None = None) -> dict:
    out = {
        "equal": M == N,
        "contains": M.contains(N),
        "contained_in": N.contains(M),
        "sum": lattice_sum(M, N),
        "product_lattice": product_lattice(M, N),
    }
    if p is not None:
        out["equal_at_p"] = equal_at_p(M, N, p)
        out["index_valuation"] = index_valuation(M, N, p)
    return out


# ---------------------------------------------------------------------------
# trace presentations

class PresentationError(ValueError):
    pass


class TracePresentation:
    """Data ``(p; (n_0, P_0), ..., (n_r, P_r))`` for ``sum_i p^-n_i Z[G] Tr_{P_i}``."""

    def __init__(self, group: Group, p: int, levels: Iterable[tuple[int, Subgroup]]):
        levels = [(int(n), P) for n, P in levels]
        self.group = group
        self.p = int(p)
        self.levels = levels
        self._validate()

    def _validate(self) -> None:
        if self.p < 2 or any(self.p % q == 0 for q in range(2, int(self.p ** 0.5) + 1)):
            raise PresentationError(f"{self.p} is not prime")
        if not self.levels:
            raise PresentationError("empty presentation")
        n0, P0 = self.levels[0]
        if n0 != 0 or P0.order != 1:
            raise PresentationError("the first level must be (0, {e})")
        for (n1, P1), (n2, P2) in zip(self.levels, self.levels[1:]):
            if not n1 < n2:
                raise PresentationError("exponents must increase strictly")
            if not (P1 <= P2 and P1.order < P2.order):
                raise PresentationError("subgroups must form a strict chain")
        for _, P in self.levels:
            if P.parent is not self.group:
                raise PresentationError("subgroup from another group")

    def __eq__(self, other) -> bool:
        return (isinstance(other, TracePresentation) and other.group is self.group
                and other.p == self.p and other.levels == self.levels)

    def __hash__(self):
        return hash((id(self.group), self.p, tuple((n, P.members) for n, P in self.levels)))

    def __repr__(self) -> str:
        return f"TracePresentation({self.bracket()})"

    def subgroup_name(self, P: Subgroup, names: dict | None = None) -> str:
        if P.order == self.group.order:
            return "G"
        if names and P.members in names:
            return names[P.members]
        return P.label()

    def bracket(self, names: dict | None = None) -> str:
        """Compact form ``<1, 1/2Tr(V2), 1/4Tr(C4)>``."""
        parts = ["1"]
        for n, P in self.levels[1:]:
            parts.append(f"1/{self.p ** n}Tr({self.subgroup_name(P, names)})")
        return "<" + ", ".join(parts) + ">"

    def expression(self, label: str | None = None, names: dict | None = None) -> str:
        """Mini-language form ``Z[S4] + (1/2)Z[S4]Tr(V2)``."""
        g = label or self.group.name or "G"
        parts = [f"Z[{g}]"]
        for n, P in self.levels[1:]:
            parts.append(f"(1/{self.p ** n})Z[{g}]Tr({self.subgroup_name(P, names)})")
        return " + ".join(parts)

    def lattice(self) -> GroupLattice:
        return from_presentation(self)

    def all_normal(self) -> bool:
        return all(P.is_normal() for _, P in self.levels)


def from_presentation(tp: TracePresentation) -> GroupLattice:
    G = tp.group
    top = tp.levels[-1][0]
    d = tp.p ** top
    blocks = []
    for n, P in tp.levels:
        tr = np.zeros(G.order, dtype=np.int64)
        tr[list(P.members)] = tp.p ** (top - n)
        reps = P.left_coset_reps()
        blocks.append(tr[G.ldiv[reps]])
    return GroupLattice(G, np.vstack(blocks), d, modulus=d)


def presentation_lattice(G: Group, p: int, levels) -> GroupLattice:
    return from_presentation(TracePresentation(G, p, levels))


def reconstruct_presentation(L: GroupLattice, p: int | None = None) -> TracePresentation | None:
    """Recover ``(p; (n_i, P_i))`` from a lattice of that shape, or None.

    For each level n the minimal subgroup P with ``p^-n Tr_P`` in L is taken;
    the candidate is accepted only if it regenerates L exactly.
    """
    G = L.group
    if not L.is_full or not L.contains(group_ring(G)):
        return None
    d = L.den
    if p is None:
        if d == 1:
            p = 2
        else:
            p = next(q for q in range(2, d + 1) if d % q == 0)
    top = 0
    x = d
    while x % p == 0:
        x //= p
        top += 1
    if x != 1:
        return None
    subs = G.all_subgroups()
    chosen: list[tuple[int, Subgroup]] = []
    for n in range(1, top + 1):
        hits = [P for P in subs if P.order > 1 and
                L.contains_element(trace_element(P) / p ** n)]
        if not hits:
            return None
        minimal = [P for P in hits if not any(Q < P for Q in hits)]
        if len(minimal) != 1:
            return None
        chosen.append((n, minimal[0]))
    levels = [(0, G.trivial)]
    for i, (n, P) in enumerate(chosen):
        if i + 1 < len(chosen) and chosen[i + 1][1] == P:
            continue
        levels.append((n, P))
    try:
        tp = TracePresentation(G, p, levels)
    except PresentationError:
        return None
    return tp if from_presentation(tp) == L else None


__all__ = [
    "GroupLattice", "LatticeError", "TracePresentation", "PresentationError",
    "lattice_from_generators", "lattice_from_rows", "group_ring", "lattice_sum",
    "lattice_sum_many", "product_lattice", "colon", "right_colon", "associated_order",
    "right_multiplier_order", "intersection", "is_ring", "index_valuation", "equal_at_p",
    "lattice_predicates", "from_presentation", "presentation_lattice",
    "reconstruct_presentation", "canonical_rows",
]

