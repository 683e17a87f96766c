"""Finite permutation groups stored by multiplication table.

Permutations are tuples of 0-based images.  Composition follows the usual
functional convention, ``(g*h)(i) = g(h(i))``.  Elements of a group are sorted
lexicographically, so the identity always has index 0.
"""

from __future__ import annotations

import re
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

Perm = tuple[int, ...]

DEFAULT_BOUND = 10_000


class GroupError(ValueError):
    """Raised for malformed group or subgroup specifications."""


# ---------------------------------------------------------------------------
# permutations

def compose(g: Perm, h: Perm) -> Perm:
    return tuple(g[i] for i in h)


def invert(g: Perm) -> Perm:
    out = [0] * len(g)
    for i, j in enumerate(g):
        out[j] = i
    return tuple(out)


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str, degree: int | None = None) -> Perm:
    """Parse cycle notation with 1-based points, e.g. ``(1,2,3)(4,5)``.

    Points may be separated by commas or blanks.  ``()`` and ``e`` denote the
    identity.
    """
    s = text.strip()
    if s in ("e", "1", "()", "id"):
        return identity_perm(degree or 1)
    if not s or s[0] != "(" or _CYCLE.sub("", s).strip():
        raise GroupError(f"malformed permutation {text!r}")
    cycles = []
    top = 0
    for body in _CYCLE.findall(s):
        pts = [int(t) for t in re.split(r"[,\s]+", body.strip()) if t]
        if any(p < 1 for p in pts) or len(set(pts)) != len(pts):
            raise GroupError(f"malformed cycle ({body}) in {text!r}")
        cycles.append(pts)
        top = max([top, *pts])
    n = degree if degree is not None else top
    if top > n:
        raise GroupError(f"point {top} exceeds degree {n} in {text!r}")
    img = list(range(n))
    for pts in cycles:
        for a, b in zip(pts, pts[1:] + pts[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def split_perms(text: str) -> list[str]:
    """Split a generator list ``(1,2)(3,4), (1,3)`` into single permutations."""
    out, depth, cur = [], 0, ""
    for ch in text:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            if cur.strip():
                out.append(cur.strip())
            cur = ""
            continue
        cur += ch
    if depth:
        raise GroupError(f"unbalanced parentheses in {text!r}")
    if cur.strip():
        out.append(cur.strip())
    return out


def format_perm(g: Perm) -> str:
    seen, parts = set(), []
    for i in range(len(g)):
        if i in seen or g[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(str(j + 1))
            j = g[j]
        parts.append("(" + ",".join(cyc) + ")")
    return "".join(parts) or "()"


# ---------------------------------------------------------------------------
# groups

class Group:
    """A finite permutation group with an explicit multiplication table.

    ``ambient`` and ``embedding`` are set when the group was built from a
    subgroup of a larger group; ``embedding[i]`` is then the index in the
    ambient group of element ``i``.
    """

    def __init__(self, elements: Sequence[Perm], name: str = "",
                 ambient: "Group | None" = None, embedding: Sequence[int] | None = None):
        els = sorted(set(tuple(e) for e in elements))
        if not els:
            raise GroupError("empty group")
        self.degree = len(els[0])
        if els[0] != identity_perm(self.degree):
            raise GroupError("identity missing")
        self.elements: tuple[Perm, ...] = tuple(els)
        self.index = {g: i for i, g in enumerate(self.elements)}
        self.name = name
        n = len(els)
        table = np.empty((n, n), dtype=np.int64)
        for i, g in enumerate(els):
            for j, h in enumerate(els):
                k = self.index.get(compose(g, h))
                if k is None:
                    raise GroupError("elements are not closed under composition")
                table[i, j] = k
        self.table = table
        self.inv = np.array([self.index[invert(g)] for g in els], dtype=np.int64)
        self.ambient = ambient
        self.embedding = None if embedding is None else np.asarray(embedding, dtype=np.int64)
        self.identity = 0

    def __len__(self) -> int:
        return len(self.elements)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __repr__(self) -> str:
        return f"Group({self.name or '?'}, order={self.order})"

    def mul(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def element(self, perm: Perm | str) -> int:
        if isinstance(perm, str):
            perm = parse_perm(perm, self.degree)
        try:
            return self.index[tuple(perm)]
        except KeyError:
            raise GroupError(f"{format_perm(tuple(perm))} is not in {self.name or 'the group'}") from None

    @cached_property
    def ldiv(self) -> np.ndarray:
        """``ldiv[g, k]`` is the index of ``g^-1 k``."""
        return self.table[self.inv, :]

    @cached_property
    def rdiv(self) -> np.ndarray:
        """``rdiv[k, h]`` is the index of ``k h^-1``."""
        return self.table[:, self.inv]

    def element_order(self, i: int) -> int:
        k, j = 1, i
        while j != 0:
            j = int(self.table[j, i])
            k += 1
        return k

    # subgroup helpers -----------------------------------------------------

    def closure(self, gens: Iterable[int]) -> frozenset[int]:
        members = {0}
        frontier = [0]
        gens = [int(g) for g in gens]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = int(self.table[x, g])
                    if y not in members:
                        members.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(members)

    def subgroup(self, gens: Iterable[int | Perm | str] = (), name: str = "") -> "Subgroup":
        idx = [g if isinstance(g, (int, np.integer)) else self.element(g) for g in gens]
        return Subgroup(self, self.closure(idx), name=name)

    def parse_subgroup(self, text: str, name: str = "") -> "Subgroup":
        body = text.strip()
        if body.startswith("sub:"):
            body = body[4:]
        body = body.strip()
        if body.startswith("<") and body.endswith(">"):
            body = body[1:-1]
        return self.subgroup(split_perms(body), name=name)

    @cached_property
    def whole(self) -> "Subgroup":
        return Subgroup(self, frozenset(range(self.order)), name="G")

    @cached_property
    def trivial(self) -> "Subgroup":
        return Subgroup(self, frozenset([0]), name="1")

    @cached_property
    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.table, self.table.T))

    def all_subgroups(self) -> list["Subgroup"]:
        return self._subgroup_list

    @cached_property
    def _subgroup_list(self) -> list["Subgroup"]:
        return self.whole.subgroups()

    def normal_subgroups(self) -> list["Subgroup"]:
        return [s for s in self.all_subgroups() if s.is_normal()]

    def conjugate_index(self, g: int, h: int) -> int:
        """Index of ``g h g^-1``."""
        return int(self.table[self.table[g, h], self.inv[g]])


class Subgroup:
    """A subgroup of ``parent`` given by its sorted member indices."""

    def __init__(self, parent: Group, members: Iterable[int], name: str = ""):
        mem = tuple(sorted(int(m) for m in members))
        if not mem or mem[0] != 0:
            raise GroupError("subgroup must contain the identity")
        self.parent = parent
        self.members = mem
        self._set = frozenset(mem)
        self.name = name
        t = parent.table
        arr = np.array(mem)
        if not set(np.unique(t[np.ix_(arr, arr)]).tolist()) <= self._set:
            raise GroupError("member set is not closed under multiplication")
        if parent.order % len(mem):
            raise GroupError("subgroup order does not divide the group order")

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, i: int) -> bool:
        return int(i) in self._set

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other: object) -> bool:
        return (isinstance(other, Subgroup) and other.parent is self.parent
                and other.members == self.members)

    def __hash__(self) -> int:
        return hash((id(self.parent), self.members))

    def __le__(self, other: "Subgroup") -> bool:
        return other.parent is self.parent and self._set <= other._set

    def __lt__(self, other: "Subgroup") -> bool:
        return self <= other and self.order < other.order

    def __repr__(self) -> str:
        label = self.name or "<" + ", ".join(format_perm(self.parent.elements[g]) for g in self.generators()) + ">"
        return f"Subgroup({label}, order={self.order})"

    def label(self) -> str:
        if self.name:
            return self.name
        return "sub: " + ", ".join(format_perm(self.parent.elements[g]) for g in self.generators())

    def contains(self, i: int) -> bool:
        return int(i) in self._set

    def contains_subgroup(self, other: "Subgroup") -> bool:
        return other <= self

    def generators(self) -> list[int]:
        """A small generating set, chosen greedily by element index."""
        gens: list[int] = []
        cur = frozenset([0])
        for g in self.members:
            if g not in cur:
                gens.append(g)
                cur = self.parent.closure(gens)
                if len(cur) == self.order:
                    break
        return gens

    def conjugate(self, g: int) -> "Subgroup":
        """``g H g^-1``."""
        G = self.parent
        return Subgroup(G, (G.conjugate_index(g, h) for h in self.members))

    def is_normal(self, within: "Subgroup | None" = None) -> bool:
        G = self.parent
        pool = range(G.order) if within is None else within.members
        return all(self.conjugate(g) == self for g in pool)

    def left_coset_reps(self) -> list[int]:
        """Minimal-index representatives of the left cosets gH, identity first."""
        G = self.parent
        covered = np.zeros(G.order, dtype=bool)
        reps = []
        arr = np.array(self.members)
        for g in range(G.order):
            if not covered[g]:
                reps.append(g)
                covered[G.table[g, arr]] = True
        return reps

    def right_coset_reps(self) -> list[int]:
        G = self.parent
        covered = np.zeros(G.order, dtype=bool)
        reps = []
        arr = np.array(self.members)
        for g in range(G.order):
            if not covered[g]:
                reps.append(g)
                covered[G.table[arr, g]] = True
        return reps

    def intersection(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, self._set & other._set)

    def join(self, other: "Subgroup") -> "Subgroup":
        return Subgroup(self.parent, self.parent.closure(self.members + other.members))

    def is_abelian(self) -> bool:
        arr = np.array(self.members)
        sub = self.parent.table[np.ix_(arr, arr)]
        return bool(np.array_equal(sub, sub.T))

    def is_cyclic(self) -> bool:
        return any(self.parent.element_order(g) == self.order for g in self.members)

    def is_p_group(self, p: int) -> bool:
        n = self.order
        while n % p == 0:
            n //= p
        return n == 1

    def subgroups(self) -> list["Subgroup"]:
        """All subgroups of the parent contained in this one."""
        G = self.parent
        cyclic = {G.closure([g]) for g in self.members}
        found = set(cyclic)
        layer = set(cyclic)
        while layer:
            new = set()
            for a in layer:
                for c in cyclic:
                    if c <= a:
                        continue
                    j = G.closure(list(a | c))
                    if j not in found:
                        new.add(j)
            found |= new
            layer = new
        subs = [Subgroup(G, s) for s in found]
        subs.sort(key=lambda s: (s.order, s.members))
        return subs

    def quotient_is_cyclic(self, normal: "Subgroup") -> bool:
        """Whether self/normal is cyclic (``normal`` must be normal in self)."""
        k = self.order // normal.order
        G = self.parent
        for g in self.members:
            if len(G.closure(list(normal.members) + [g])) == self.order:
                return True
        return k == 1

    def quotient_is_elementary_abelian(self, normal: "Subgroup", p: int) -> bool:
        G = self.parent
        k = self.order // normal.order
        if k == 1:
            return True
        n = k
        while n % p == 0:
            n //= p
        if n != 1:
            return False
        nset = normal._set
        for a in self.members:
            # a^p in N
            x = 0
            for _ in range(p):
                x = int(G.table[x, a])
            if x not in nset:
                return False
            for b in self.members:
                comm = G.table[G.table[G.inv[a], G.inv[b]], G.table[a, b]]
                if int(comm) not in nset:
                    return False
        return True

    def as_group(self, name: str | None = None) -> Group:
        """The subgroup as a standalone group remembering its embedding."""
        G = self.parent
        els = [G.elements[m] for m in self.members]
        H = Group(els, name=self.name if name is None else name, ambient=G)
        H.embedding = np.array([G.index[e] for e in H.elements], dtype=np.int64)
        return H


# ---------------------------------------------------------------------------
# normal closure and containment

def normal_closure(G: Group, H: Subgroup) -> Subgroup:
    """Smallest normal subgroup of ``G`` containing ``H``."""
    if H.parent is not G:
        raise GroupError("H is not a subgroup of G")
    gens = set(H.members)
    cur = H
    while True:
        for g in range(G.order):
            for h in cur.generators():
                gens.add(G.conjugate_index(g, h))
        nxt = Subgroup(G, G.closure(gens))
        if nxt == cur:
            return nxt
        cur = nxt


def lift_subgroup(H: Group, P: Subgroup) -> Subgroup:
    """Image in ``H.ambient`` of a subgroup ``P`` of the standalone group ``H``."""
    if H.ambient is None or P.parent is not H:
        raise GroupError("subgroup does not belong to an embedded group")
    name = H.name if P.order == H.order else P.name
    return Subgroup(H.ambient, (int(H.embedding[m]) for m in P.members), name=name)


def restrict_subgroup(H: Group, P: Subgroup) -> Subgroup:
    """A subgroup of ``H.ambient`` contained in ``H`` viewed inside ``H``."""
    if H.ambient is None or P.parent is not H.ambient:
        raise GroupError("subgroup does not live in the ambient group")
    back = {int(a): i for i, a in enumerate(H.embedding)}
    try:
        return Subgroup(H, (back[m] for m in P.members), name=P.name)
    except KeyError:
        raise GroupError("subgroup is not contained in the embedded group") from None


# ---------------------------------------------------------------------------
# constructors

def generate(gens: Sequence[Perm], name: str = "", bound: int = DEFAULT_BOUND) -> Group:
    """Enumerate the group generated by permutations ``gens``."""
    if not gens:
        raise GroupError("empty generator list")
    n = max(len(g) for g in gens)
    gens = [tuple(g) + tuple(range(len(g), n)) for g in gens]
    e = identity_perm(n)
    seen = {e}
    frontier = [e]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = compose(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
                    if len(seen) > bound:
                        raise GroupError(f"group exceeds the bound of {bound} elements")
        frontier = nxt
    return Group(seen, name=name)


def _cycle(n: int) -> Perm:
    return tuple((i + 1) % n for i in range(n))


def cyclic(n: int) -> Group:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    if n == 1:
        return Group([(0,)], name="C1")
    return generate([_cycle(n)], name=f"C{n}")


def dihedral(order: int) -> Group:
    """Dihedral group of the given order (``D8`` is ``<(1,2,3,4),(1,3)>``)."""
    if order < 2 or order % 2:
        raise GroupError("dihedral group order must be even")
    n = order // 2
    if n == 1:
        return Group([(0, 1), (1, 0)], name="D2")
    if n == 2:
        return generate([parse_perm("(1,2)", 4), parse_perm("(3,4)", 4)], name="D4")
    if n == 4:
        return generate([parse_perm("(1,2,3,4)"), parse_perm("(1,3)", 4)], name="D8")
    refl = tuple((-i) % n for i in range(n))
    return generate([_cycle(n), refl], name=f"D{order}")


def symmetric(n: int) -> Group:
    if n == 1:
        return Group([(0,)], name="S1")
    gens = [_cycle(n), (1, 0) + tuple(range(2, n))]
    return generate(gens, name=f"S{n}")


def alternating(n: int) -> Group:
    if n < 3:
        return Group([identity_perm(max(n, 1))], name=f"A{n}")
    gens = [(1, 2, 0) + tuple(range(3, n))]
    for k in range(3, n):
        img = list(range(n))
        img[0], img[1], img[k] = 1, k, 0
        gens.append(tuple(img))
    return generate(gens, name=f"A{n}")


def quaternion() -> Group:
    i = parse_perm("(1,2,3,4)(5,6,7,8)")
    j = parse_perm("(1,5,3,7)(2,8,4,6)")
    return generate([i, j], name="Q8")


def klein() -> Group:
    return generate([parse_perm("(1,2)(3,4)"), parse_perm("(1,3)(2,4)")], name="V4")


_LABEL = re.compile(r"^(C|D|A|S)(\d+)$")


def make_group(spec: str | Sequence[Perm], name: str = "", bound: int = DEFAULT_BOUND) -> Group:
    """Build a group from a label (``Cn``, ``D2n``, ``An``, ``Sn``, ``V4``, ``Q8``)
    or from a generator list (cycle notation string or permutation tuples)."""
    if not isinstance(spec, str):
        return generate([tuple(g) for g in spec], name=name, bound=bound)
    s = spec.strip()
    if s.startswith("perm-gens:"):
        s = s[len("perm-gens:"):]
        return generate([parse_perm(t) for t in split_perms(s)], name=name, bound=bound)
    if s.startswith("("):
        return generate([parse_perm(t) for t in split_perms(s)], name=name, bound=bound)
    if s == "V4":
        G = klein()
    elif s == "Q8":
        G = quaternion()
    else:
        m = _LABEL.match(s)
        if not m:
            raise GroupError(f"unknown group label {spec!r}")
        kind, k = m.group(1), int(m.group(2))
        if kind == "C":
            G = cyclic(k)
        elif kind == "D":
            G = dihedral(k)
        elif kind == "A":
            G = alternating(k) if k <= 7 else None
        else:
            G = symmetric(k) if k <= 7 else None
        if G is None:
            raise GroupError(f"group {spec!r} exceeds the supported size")
        if G.order > bound:
            raise GroupError(f"group exceeds the bound of {bound} elements")
    if name:
        G.name = name
    return G


def subgroups_between(low: Subgroup, high: Subgroup) -> list[Subgroup]:
    """Subgroups ``S`` with ``low <= S <= high``."""
    return [s for s in high.subgroups() if low <= s]


def is_dihedral(H: Subgroup) -> bool:
    """Dihedral of order 2m (m >= 2): a cyclic subgroup of index 2 inverted by some outside involution."""
    G = H.parent
    n = H.order
    if n < 4 or n % 2:
        return False
    if n == 4:
        return not H.is_cyclic()
    m = n // 2
    for r in H.members:
        if G.element_order(r) != m:
            continue
        rot = G.closure([r])
        for s in H.members:
            if s in rot:
                continue
            if G.element_order(s) == 2 and G.conjugate_index(s, r) == int(G.inv[r]):
                return True
        return False
    return False


__all__ = [
    "Group", "Subgroup", "GroupError", "Perm", "compose", "invert", "parse_perm",
    "format_perm", "split_perms", "make_group", "generate", "cyclic", "dihedral",
    "symmetric", "alternating", "quaternion", "klein", "normal_closure",
    "lift_subgroup", "restrict_subgroup", "subgroups_between", "is_dihedral",
]
