"""Ramification profiles and the freeness criteria for A4, S4, A5 and dihedral fields.

A profile records, for one wild prime ``p``, the decomposition group ``D`` and
the lower-numbering ramification groups ``G_0 >= G_1 >= ...`` as subgroups of
the Galois group.  Everything arithmetic about the underlying local field
(which filtrations occur, which local orders are free) enters as a stored
fact; nothing here computes with p-adic fields.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from .catalog import DIHEDRAL_WHITELIST, dihedral_parameters, names_for, standard_group
from .catalog import subgroup as catalog_subgroup
from .groups import Group, Subgroup, is_dihedral, lift_subgroup, restrict_subgroup
from .induction import associated_order_of_induced, induce_lattice, induced_presentation
from .lattices import TracePresentation, associated_order, from_presentation
from .local_freeness import is_free_over_associated_order


class ProfileError(ValueError):
    """A profile violating a structural invariant or a known local fact."""


class UnsupportedProfile(ValueError):
    """No presentation of the local associated order is on record for this shape."""


class UnsupportedGroup(ValueError):
    pass


class LocalNotFree(Exception):
    """The local ring of integers is not projective over its associated order."""

    def __init__(self, rule: str):
        super().__init__(rule)
        self.rule = rule


def _vp(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, math.isqrt(p) + 1))


def _is_a4(H: Subgroup) -> bool:
    if H.order != 12:
        return False
    orders = Counter(H.parent.element_order(g) for g in H.members)
    return orders == Counter({1: 1, 2: 3, 3: 8})


@dataclass
class RamificationProfile:
    """``(p, D, [G_0, G_1, ...])`` with all groups inside ``group``.

    ``filtration[t]`` is ``G_t``; groups past the end are trivial.  An empty
    filtration means ``p`` is unramified.
    """

    p: int
    group: Group
    decomposition: Subgroup
    filtration: list[Subgroup] = field(default_factory=list)
    validate: bool = True

    def __post_init__(self):
        while self.filtration and self.filtration[-1].order == 1:
            self.filtration.pop()
        if self.validate:
            validate_profile(self)

    def G(self, t: int) -> Subgroup:
        if t < len(self.filtration):
            return self.filtration[t]
        return self.group.trivial

    @property
    def inertia(self) -> Subgroup:
        return self.G(0)

    @property
    def e(self) -> int:
        return self.G(0).order

    @property
    def e_wild(self) -> int:
        return self.G(1).order

    @property
    def tame(self) -> bool:
        return self.G(1).order == 1

    @property
    def wild(self) -> bool:
        return not self.tame

    @property
    def weak(self) -> bool:
        return self.G(2).order == 1

    def different_exponent(self) -> int:
        """``v_K`` of the different: ``sum_i (|G_i| - 1)``."""
        return sum(H.order - 1 for H in self.filtration)

    def jumps(self) -> list[int]:
        """Lower jumps: the ``t`` with ``G_t != G_{t+1}``."""
        return [t for t in range(len(self.filtration)) if self.G(t) != self.G(t + 1)]

    def describe(self, names: Mapping | None = None) -> dict:
        def nm(H):
            if H.order == self.group.order:
                return "G"
            if names and H.members in names:
                return names[H.members]
            return H.label()
        return {
            "p": self.p,
            "decomposition": nm(self.decomposition),
            "inertia": nm(self.inertia),
            "e": self.e,
            "jumps": self.jumps(),
            "filtration": [nm(H) for H in self.filtration],
        }


def filtration_from_steps(steps) -> list[Subgroup]:
    """``[(D8, 1), (C4, 3), (V2, 7)]``: G_t = D8 for t <= 1, C4 for t <= 3, V2 for t <= 7."""
    out: list[Subgroup] = []
    for H, last in steps:
        if last < len(out):
            raise ProfileError("step bounds must increase")
        out.extend([H] * (last + 1 - len(out)))
    return out


def make_profile(label: str, p: int, decomposition: str, steps) -> RamificationProfile:
    """Profile over a catalogued group, subgroups given by catalog name."""
    G = standard_group(label)

    def sub(x):
        return x if isinstance(x, Subgroup) else catalog_subgroup(label, x)

    filt = filtration_from_steps([(sub(H), t) for H, t in steps])
    return RamificationProfile(p, G, sub(decomposition), filt)


def _herbrand(profile: RamificationProfile, u: int):
    e = profile.e
    return sum(Fraction(profile.G(t).order, e) for t in range(1, u + 1))


def validate_profile(pr: RamificationProfile) -> None:
    G, D, p = pr.group, pr.decomposition, pr.p
    if not _is_prime(p):
        raise ProfileError(f"{p} is not prime")
    if D.parent is not G:
        raise ProfileError("decomposition group is not a subgroup of G")
    for t, H in enumerate(pr.filtration):
        if H.parent is not G:
            raise ProfileError(f"G_{t} is not a subgroup of G")
        if not H <= D:
            raise ProfileError(f"G_{t} is not contained in D")
        if t and not H <= pr.filtration[t - 1]:
            raise ProfileError(f"filtration is not decreasing at G_{t}")
        if not H.is_normal(D):
            raise ProfileError(f"G_{t} is not normal in D")
    G0, G1 = pr.G(0), pr.G(1)
    if not D.quotient_is_cyclic(G0):
        raise ProfileError("D/G_0 is not cyclic")
    if not G1.is_p_group(p):
        raise ProfileError("G_1 is not a p-group")
    if (G0.order // G1.order) % p == 0 or not G0.quotient_is_cyclic(G1):
        raise ProfileError("G_0/G_1 is not cyclic of order prime to p")
    for t in range(1, len(pr.filtration)):
        if not pr.G(t).quotient_is_elementary_abelian(pr.G(t + 1), p):
            raise ProfileError(f"G_{t}/G_{t + 1} is not elementary abelian")
    if G0.is_abelian() and pr.wild:
        for u in pr.jumps():
            if u >= 1 and _herbrand(pr, u).denominator != 1:
                raise ProfileError(f"upper jump at lower jump {u} is not an integer (Hasse-Arf)")
    _check_local_facts(pr)


def _check_local_facts(pr: RamificationProfile) -> None:
    D, p = pr.decomposition, pr.p
    if p == 2 and D.order == 4 and not D.is_cyclic() and pr.inertia == D:
        if pr.jumps() != [1, 3]:
            raise ProfileError("a totally ramified C2 x C2 extension of Q_2 has lower jumps 1 and 3")
    if _is_a4(D):
        if p == 3:
            raise ProfileError("Q_3 has no Galois extension with group A4")
        if p == 2 and not (pr.wild and pr.weak and pr.inertia.order == 4):
            raise ProfileError("the A4 extension of Q_2 is wildly and weakly ramified with inertia V4")


# ---------------------------------------------------------------------------
# valuation criterion

def trace_quotient_in_order(pr: RamificationProfile, H: Subgroup, r: int) -> bool:
    """Whether ``(1/r) Tr_H`` lies in the local associated order.

    Compares the different of K over the fixed field of H, computed from the
    restricted filtration, with ``e v_p(r)``.
    """
    if r < 1:
        raise ValueError("r must be positive")
    if H.parent is not pr.group or not H <= pr.decomposition:
        raise ProfileError("H is not contained in D")
    return trace_quotient_sum(pr, H) >= pr.e * _vp(r, pr.p)


def trace_quotient_sum(pr: RamificationProfile, H: Subgroup) -> int:
    return sum(Gi.intersection(H).order - 1 for Gi in pr.filtration)


def almost_maximal_failure(pr: RamificationProfile) -> tuple[int, Subgroup] | None:
    for t in range(1, len(pr.filtration)):
        top, low = pr.G(t), pr.G(t + 1)
        for H in top.subgroups():
            if low <= H and not trace_quotient_in_order(pr, H, H.order):
                return t, H
    return None


def almost_maximal(pr: RamificationProfile) -> bool:
    return almost_maximal_failure(pr) is None


def ramification_predicates(pr: RamificationProfile) -> dict[str, bool]:
    return {"tame": pr.tame, "wild": pr.wild, "weak": pr.weak, "almost_maximal": almost_maximal(pr)}


# ---------------------------------------------------------------------------
# local associated orders

def _dgroup(pr: RamificationProfile) -> Group:
    D = pr.decomposition
    if D.order == pr.group.order:
        Dg = D.as_group(name=pr.group.name)
    else:
        Dg = D.as_group()
    return Dg


def local_presentation(pr: RamificationProfile) -> TracePresentation:
    """The associated order of the completed extension as a trace presentation over D."""
    Dg = _dgroup(pr)
    D, p = pr.decomposition, pr.p
    triv = Dg.trivial

    def down(H: Subgroup) -> Subgroup:
        return restrict_subgroup(Dg, H)

    if pr.tame:
        return TracePresentation(Dg, p, [(0, triv)])
    if pr.weak:
        return TracePresentation(Dg, p, [(0, triv), (1, down(pr.inertia))])
    dihedral = is_dihedral(D)
    abelian = D.is_abelian() and (D.is_cyclic() or D.order == 4)
    if not (dihedral or abelian):
        raise UnsupportedProfile("no presentation on record for a non-weak profile with this decomposition group")
    if almost_maximal(pr):
        chain = []
        for t in range(len(pr.filtration) - 1, 0, -1):
            H = pr.G(t)
            if not chain or chain[-1][1] != H:
                chain.append((_vp(H.order, p), H))
        return TracePresentation(Dg, p, [(0, triv)] + [(n, down(H)) for n, H in chain])
    if dihedral:
        G0 = pr.inertia
        if G0.order == 2 * p and is_dihedral(G0):
            return TracePresentation(Dg, p, [(0, triv), (1, down(G0))])
        raise LocalNotFree("dihedral, not almost-maximally ramified, inertia not dihedral of order 2p: "
                           "the local ring of integers is not projective")
    raise UnsupportedProfile("abelian decomposition group without almost-maximal ramification")


def local_freeness_fact(pr: RamificationProfile) -> str:
    """Citation for freeness of the local ring of integers over its associated order."""
    if pr.tame:
        return "tame: the local associated order is the group ring and the ring of integers is free"
    if pr.weak:
        return "weakly ramified: the ring of integers is free over the local associated order"
    if pr.decomposition.is_abelian():
        return "abelian over Q_p: the ring of integers is free over the local associated order"
    if is_dihedral(pr.decomposition):
        return "dihedral over Q_p: free exactly in the almost-maximal or dihedral-inertia cases"
    raise UnsupportedProfile("no local freeness fact on record")


# ---------------------------------------------------------------------------
# verdicts

@dataclass
class Verdict:
    free: bool | None
    rule: str
    conditional: bool = False
    local: str | None = None
    induced: str | None = None
    order: str | None = None
    details: dict = field(default_factory=dict)

    def label(self) -> str:
        return {True: "free", False: "not free", None: "unknown"}[self.free]

    def as_dict(self) -> dict:
        d = {"free": self.free, "verdict": self.label(), "rule": self.rule}
        if self.conditional:
            d["conditional"] = True
        for key in ("local", "induced", "order"):
            if getattr(self, key) is not None:
                d[key] = getattr(self, key)
        if self.details:
            d["details"] = self.details
        return d


SUPPORTED = ("A4", "S4", "A5")


def required_primes(label: str) -> tuple[int, ...]:
    if label in ("A4", "S4"):
        return (2,)
    if label == "A5":
        return (2, 3, 5)
    pn = _dihedral(label)
    if pn is None:
        raise UnsupportedGroup(f"unsupported group {label!r}")
    p, n = pn
    return () if n == 1 else (p,)


def _dihedral(label: str) -> tuple[int, int] | None:
    if not label.startswith("D") or not label[1:].isdigit():
        return None
    return dihedral_parameters(int(label[1:]))


def _prime_rule(label: str, pr: RamificationProfile) -> tuple[bool, str]:
    """Whether the local condition at ``pr.p`` holds, with the reason."""
    G, D, p = pr.group, pr.decomposition, pr.p
    if label == "A4":
        if pr.tame:
            return True, "A4 criterion: 2 is tamely ramified"
        if D.order == G.order:
            return True, "A4 criterion: 2 has full decomposition group"
        return False, "A4 criterion: 2 is wild without full decomposition group"
    if label == "S4":
        if pr.tame:
            return True, "S4 criterion: 2 is tamely ramified"
        if D.order == 12:
            return True, "S4 criterion: decomposition group of order 12"
        if pr.weak and D.order == G.order:
            return True, "S4 criterion: wild and weak with full decomposition group"
        G0 = pr.inertia
        if pr.weak and D.order == 8 and G0.order == 4 and G0.is_normal():
            return True, "S4 criterion: wild and weak, |D| = 8, inertia the normal subgroup of order 4"
        return False, "S4 criterion: none of the free cases applies at 2"
    if label == "A5":
        if pr.tame:
            return True, f"A5 criterion: {p} is tamely ramified"
        if p == 2:
            return False, "A5 criterion: 2 must be tamely ramified"
        need = 2 * p
        if pr.weak and pr.e == need:
            return True, f"A5 criterion: {p} is weakly ramified with ramification index {need}"
        return False, f"A5 criterion: {p} is wild but not weakly ramified with ramification index {need}"
    raise UnsupportedGroup(f"unsupported group {label!r}")


def _check_profile_group(label: str, pr: RamificationProfile) -> None:
    if pr.group is not standard_group(label) and pr.group.name != label:
        raise ProfileError(f"profile is over {pr.group.name or 'another group'}, not {label}")


def _as_profile_map(profiles) -> dict[int, RamificationProfile]:
    if isinstance(profiles, RamificationProfile):
        return {profiles.p: profiles}
    if isinstance(profiles, Mapping):
        return dict(profiles)
    return {pr.p: pr for pr in profiles}


def classify_prime(label: str, pr: RamificationProfile) -> Verdict:
    """Local verdict at one prime: whether the group-level criterion holds there."""
    _check_profile_group(label, pr)
    if label in SUPPORTED:
        free, rule = _prime_rule(label, pr)
        v = Verdict(free, rule)
    else:
        v = _classify_dihedral(label, {pr.p: pr}, assume_arithmetic=True)
    _attach_presentations(v, label, pr)
    return v


def _attach_presentations(v: Verdict, label: str, pr: RamificationProfile) -> None:
    names = names_for(label)
    try:
        tp = local_presentation(pr)
    except (UnsupportedProfile, LocalNotFree):
        return
    G = pr.group
    ind = induced_presentation(tp, G) if tp.group is not G else tp
    v.local = _local_bracket(tp, names)
    v.induced = ind.bracket(names)
    v.order = associated_order_of_induced(tp, G).bracket(names)


def _local_bracket(tp: TracePresentation, names) -> str:
    H = tp.group
    if H.ambient is None:
        return tp.bracket(names)
    parts = ["1"]
    for n, P in tp.levels[1:]:
        Q = lift_subgroup(H, P)
        nm = names.get(Q.members) if names else None
        if P.order == H.order:
            nm = "D"
        parts.append(f"1/{tp.p ** n}Tr({nm or Q.label()})")
    return "<" + ", ".join(parts) + ">"


def classify(label: str, profiles, *, assume_arithmetic: bool = False) -> Verdict:
    """Global verdict for ``O_K`` over its associated order, from local profiles."""
    pmap = _as_profile_map(profiles)
    for pr in pmap.values():
        _check_profile_group(label, pr)
    if label not in SUPPORTED:
        return _classify_dihedral(label, pmap, assume_arithmetic=assume_arithmetic)
    failing, reasons = None, []
    for p in required_primes(label):
        if p not in pmap:
            raise ProfileError(f"missing profile for p = {p}")
        free, rule = _prime_rule(label, pmap[p])
        reasons.append(rule)
        if not free and failing is None:
            failing = rule
    if failing is not None:
        return Verdict(False, failing, details={"conditions": reasons})
    return Verdict(True, "; ".join(reasons))


def _classify_dihedral(label: str, pmap: dict, *, assume_arithmetic: bool) -> Verdict:
    pn = _dihedral(label)
    if pn is None:
        raise UnsupportedGroup(f"unsupported group {label!r}")
    p, n = pn
    if n == 1:
        return Verdict(True, "dihedral of degree 2p: always free")
    conditional = False
    if DIHEDRAL_WHITELIST.get(p, 0) < n:
        if not assume_arithmetic:
            raise UnsupportedGroup(
                f"class number and regularity hypotheses for (p, n) = ({p}, {n}) are not on record")
        conditional = True
    if p not in pmap:
        raise ProfileError(f"missing profile for p = {p}")
    pr = pmap[p]
    if pr.tame:
        return Verdict(True, f"dihedral of degree 2p^n: {p} tamely ramified, locally free everywhere",
                       conditional)
    if p == 2:
        return Verdict(None, "dihedral of degree 2^(n+1): free iff locally free at 2, "
                             "which is not decided for wild profiles", conditional)
    am = almost_maximal(pr)
    rule = f"dihedral of degree 2p^n, p odd: free iff {p} is almost-maximally ramified"
    e_power = pr.e == p ** _vp(pr.e, p)
    details = {"almost_maximal": am, "e_power_of_p": e_power}
    if p >= 5:
        rule += " iff the ramification index is a power of p"
    elif e_power:
        details["implication"] = "ramification index a power of p implies free"
    return Verdict(am, rule, conditional, details=details)


# ---------------------------------------------------------------------------
# cross-check against the lattice engine

_STORED_NOT_FREE = ("S4 with full decomposition group at 2, wild and not weak: "
                    "the local ring of integers is not free (checked on all such fields)")


@dataclass
class EndToEnd:
    theorem: bool | None
    engine: bool | None
    source: str
    rule: str
    induced: str | None = None
    order: str | None = None
    order_agrees: bool | None = None
    hom_dims: tuple | None = None

    @property
    def agree(self) -> bool:
        return self.theorem == self.engine

    def as_dict(self) -> dict:
        d = {"verdict_theorem": self.theorem, "verdict_engine": self.engine, "agree": self.agree,
             "rule": self.rule, "engine_source": self.source}
        for key in ("induced", "order", "order_agrees"):
            if getattr(self, key) is not None:
                d[key] = getattr(self, key)
        if self.hom_dims is not None:
            d["hom_dims"] = list(self.hom_dims)
        return d


def engine_verdict(label: str, pr: RamificationProfile) -> EndToEnd:
    """Local freeness at p computed from the induced local associated order."""
    G = pr.group
    names = names_for(label)
    try:
        tp = local_presentation(pr)
    except LocalNotFree as exc:
        return EndToEnd(None, False, "local non-projectivity persists under induction", exc.rule)
    except UnsupportedProfile:
        if label == "S4" and pr.decomposition.order == G.order and pr.wild and not pr.weak:
            return EndToEnd(None, False, "stored fact", _STORED_NOT_FREE)
        raise
    M_D = from_presentation(tp)
    Hsub = pr.decomposition
    M = induce_lattice(G, Hsub, M_D) if tp.group is not G else M_D
    closed_tp = associated_order_of_induced(tp, G)
    closed = from_presentation(closed_tp)
    direct = associated_order(M)
    rep = is_free_over_associated_order(M, pr.p, order=direct)
    ind = induced_presentation(tp, G) if tp.group is not G else tp
    return EndToEnd(None, rep.free, "lattice engine", local_freeness_fact(pr),
                    induced=ind.bracket(names), order=closed_tp.bracket(names),
                    order_agrees=closed == direct, hom_dims=rep.hom_dims)


def end_to_end_check(label: str, pr: RamificationProfile) -> EndToEnd:
    v = classify_prime(label, pr)
    res = engine_verdict(label, pr)
    res.theorem = v.free
    res.rule = v.rule
    return res


# ---------------------------------------------------------------------------
# reference shapes: the profiles arising in the case analyses for A4, S4, A5

# (group, name, p, D, steps, catalog row or None)
_SHAPES = [
    ("A4", "tame", 2, "C3", [("C3", 0)], None),
    ("A4", "full decomposition group", 2, "G", [("V4", 1)], None),
    ("A4", "D = G_0 = V4, jumps 1 and 3", 2, "V4", [("V4", 1), ("C2", 3)], None),
    ("A4", "D = V4, inertia C2, jump 1", 2, "V4", [("C2", 1)], None),
    ("A4", "D = V4, inertia C2, jump 2", 2, "V4", [("C2", 2)], None),
    ("A4", "D = G_0 = C2", 2, "C2", [("C2", 1)], None),
    ("S4", "D8 almost maximal through C4", 2, "D8", [("D8", 1), ("C4", 3), ("V2", 7)], "i"),
    ("S4", "D8 almost maximal through V4", 2, "D8", [("D8", 1), ("V4", 3), ("V2", 7)], "ii"),
    ("S4", "D8 almost maximal through C22", 2, "D8", [("D8", 1), ("C22", 3), ("V2", 7)], "iii"),
    ("S4", "D = C4 totally ramified", 2, "C4", [("C4", 1), ("V2", 3)], "iv"),
    ("S4", "D = D8, inertia C4", 2, "D8", [("C4", 1), ("V2", 3)], "iv"),
    ("S4", "D = G_0 = V4", 2, "V4", [("V4", 1), ("V2", 3)], "v"),
    ("S4", "D = D8, inertia V4, not weak", 2, "D8", [("V4", 1), ("V2", 3)], "v"),
    ("S4", "D = G_0 = C22, G_2 = V2", 2, "C22", [("C22", 1), ("V2", 3)], "vi"),
    ("S4", "D = G_0 = C22, G_2 = W2", 2, "C22", [("C22", 1), ("W2", 3)], "vii"),
    ("S4", "D = D8, inertia C22, weak", 2, "D8", [("C22", 1)], "viii"),
    ("S4", "D = C4, inertia V2", 2, "C4", [("V2", 1)], "ix"),
    ("S4", "D = V4, inertia V2", 2, "V4", [("V2", 1)], "ix"),
    ("S4", "D = G_0 = W2", 2, "W2", [("W2", 1)], "x"),
    ("S4", "D = C22, inertia W2", 2, "C22", [("W2", 1)], "x"),
    ("S4", "D8 with jumps 1, 3, 5", 2, "D8", [("D8", 1), ("C4", 3), ("V2", 5)], None),
    ("S4", "full decomposition group, not weak", 2, "G", [("A4", 0), ("V4", 3)], None),
    ("S4", "tame", 2, "S3", [("C3", 0)], None),
    ("S4", "decomposition group of order 12", 2, "A4", [("V4", 1)], None),
    ("S4", "full decomposition group, weak", 2, "G", [("A4", 0), ("V4", 1)], None),
    ("S4", "D = D8, inertia V4, weak", 2, "D8", [("V4", 1)], None),
    ("A5", "tame at 2", 2, "C3", [("C3", 0)], None),
    ("A5", "D = G_0 = C2", 2, "C2", [("C2", 1)], "i"),
    ("A5", "D = C22, inertia C2", 2, "C22", [("C2", 1)], "i"),
    ("A5", "D = G_0 = C22", 2, "C22", [("C22", 1), ("C2", 3)], "ii"),
    ("A5", "D = A4", 2, "Alt4", [("C22", 1)], "iii"),
    ("A5", "tame at 3", 3, "C2", [("C2", 0)], None),
    ("A5", "D = G_0 = C3", 3, "C3", [("C3", 1)], "i"),
    ("A5", "D = D6, e = 3", 3, "D6", [("C3", 2)], "i"),
    ("A5", "D = D6, e = 6, not weak", 3, "D6", [("D6", 0), ("C3", 2)], "i"),
    ("A5", "D = D6, e = 6, weak", 3, "D6", [("D6", 0), ("C3", 1)], "ii"),
    ("A5", "tame at 5", 5, "C2", [("C2", 0)], None),
    ("A5", "D = G_0 = C5", 5, "C5", [("C5", 1)], "i"),
    ("A5", "D = D10, e = 5", 5, "D10", [("C5", 3)], "i"),
    ("A5", "D = D10, e = 10, not weak", 5, "D10", [("D10", 0), ("C5", 2)], "i"),
    ("A5", "D = D10, e = 10, weak", 5, "D10", [("D10", 0), ("C5", 1)], "ii"),
]


@dataclass
class Shape:
    group: str
    name: str
    profile: RamificationProfile
    row: str | None


def reference_shapes(label: str | None = None) -> list[Shape]:
    out = []
    for g, name, p, D, steps, row in _SHAPES:
        if label is None or g == label:
            out.append(Shape(g, name, make_profile(g, p, D, steps), row))
    return out


__all__ = [
    "ProfileError", "UnsupportedProfile", "UnsupportedGroup", "LocalNotFree",
    "RamificationProfile", "filtration_from_steps", "make_profile", "validate_profile", "trace_quotient_in_order", "trace_quotient_sum",
    "almost_maximal", "almost_maximal_failure", "ramification_predicates", "local_presentation",
    "local_freeness_fact", "Verdict", "classify", "classify_prime", "required_primes",
    "EndToEnd", "engine_verdict", "end_to_end_check", "Shape", "reference_shapes",
]
