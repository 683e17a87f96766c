"""Induction of lattices and orders from a subgroup, with the trace-sum closed forms.

A lattice over ``Q[H]`` is pushed into ``Q[G]`` along ``H.embedding``; the
induced lattice is the Z[G]-span of the image.  When the H-level associated
order is a sum of scaled trace ideals, the induced lattice and its associated
order have closed forms in terms of the same subgroups and their normal
closures; :func:`induction_report` computes both sides so they can be compared.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .groups import Group, GroupError, Subgroup, lift_subgroup, normal_closure
from .intmat import to_object
from .lattices import (GroupLattice, LatticeError, PresentationError, TracePresentation,
                       associated_order, from_presentation, intersection, is_ring,
                       lattice_sum_many)


def _subgroup_group(G: Group, H: Subgroup | Group) -> Group:
    if isinstance(H, Group):
        if H.ambient is not G:
            raise GroupError("H is not embedded in G")
        return H
    if H.parent is not G:
        raise GroupError("H is not a subgroup of G")
    return H.as_group()


def induce_lattice(G: Group, H: Subgroup | Group, M_H: GroupLattice) -> GroupLattice:
    """``Ind_H^G M``: the Z[G]-span of the image of ``M_H`` in Q[G]."""
    Hg = _subgroup_group(G, H) if not isinstance(H, Group) else H
    if M_H.group is not Hg:
        if isinstance(H, Subgroup) and M_H.group.ambient is G and \
                sorted(int(x) for x in M_H.group.embedding) == sorted(H.members):
            Hg = M_H.group
        else:
            raise LatticeError("lattice does not live over the given subgroup")
    if Hg.ambient is not G:
        raise GroupError("embedding mismatch")
    M_H._require_full("induction")
    emb = Hg.embedding
    base = np.zeros((M_H.rank, G.order), dtype=object)
    base[:, emb] = to_object(M_H.basis)
    rows = np.vstack([base[:, G.ldiv[s]] for s in _coset_reps(G, emb)])
    return GroupLattice(G, rows, M_H.den, modulus=M_H.exponent * M_H.den)


def _coset_reps(G: Group, emb: np.ndarray) -> list[int]:
    return Subgroup(G, (int(x) for x in emb)).left_coset_reps()


def induced_presentation(tp: TracePresentation, G: Group) -> TracePresentation:
    """The same data ``(n_i, P_i)`` read inside G."""
    H = tp.group
    if H.ambient is not G:
        raise GroupError("presentation group is not embedded in G")
    return TracePresentation(G, tp.p, [(n, lift_subgroup(H, P)) for n, P in tp.levels])


def normalize_chain(levels: list[tuple[int, Subgroup]]) -> list[tuple[int, Subgroup]]:
    """Collapse repeated subgroups of a weakly increasing chain, keeping the largest exponent."""
    out: list[tuple[int, Subgroup]] = []
    for i, (n, P) in enumerate(levels):
        if i + 1 < len(levels) and levels[i + 1][1] == P:
            continue
        out.append((n, P))
    return out


def associated_order_of_induced(tp: TracePresentation, G: Group) -> TracePresentation:
    """Replace each ``P_i`` by its normal closure in G and renormalize the chain."""
    lifted = induced_presentation(tp, G) if tp.group is not G else tp
    closed = [(n, normal_closure(G, P)) for n, P in lifted.levels]
    return TracePresentation(G, tp.p, normalize_chain(closed))


def normal_closures(tp: TracePresentation, G: Group) -> list[Subgroup]:
    lifted = induced_presentation(tp, G) if tp.group is not G else tp
    return [normal_closure(G, P) for _, P in lifted.levels]


def presentation_is_order(tp: TracePresentation) -> bool:
    """Whether the trace-sum lattice is a ring: each ``P_i`` normal and ``p^n_i`` dividing ``|P_i|``."""
    return all(P.is_normal() and P.order % tp.p ** n == 0 for n, P in tp.levels)


def _conjugation_on_subgroup(G: Group, Hg: Group, g: int) -> list[int]:
    back = {int(a): i for i, a in enumerate(Hg.embedding)}
    return [back[G.conjugate_index(g, int(Hg.embedding[k]))] for k in range(Hg.order)]


def a_star(G: Group, H: Subgroup, M_H: GroupLattice) -> GroupLattice:
    """Intersection of the G-conjugates of ``A(Q[H], M_H)`` inside Q[H]; H must be normal."""
    if not H.is_normal():
        raise GroupError("a_star needs H normal in G")
    Hg = M_H.group
    if Hg.ambient is not G or sorted(int(x) for x in Hg.embedding) != sorted(H.members):
        raise LatticeError("lattice does not live over H")
    A = associated_order(M_H)
    conj = {A}
    for g in H.left_coset_reps():
        conj.add(A.permute(_conjugation_on_subgroup(G, Hg, g)))
    return intersection(list(conj))


def conjugate_intersection(L: GroupLattice) -> GroupLattice:
    """``the intersection over g of g L g^-1``, via one sum of duals."""
    G = L.group
    conj = {L.conjugate(g) for g in range(G.order)}
    if len(conj) == 1:
        return L
    return lattice_sum_many([X.dual() for X in conj]).dual()


@dataclass
class InductionReport:
    group: Group
    presentation: TracePresentation
    induced: GroupLattice
    induced_closed_form: GroupLattice
    order_direct: GroupLattice
    order_closed_form: GroupLattice
    order_presentation: TracePresentation
    is_ring: bool
    all_normal: bool
    closures: list[Subgroup] = field(default_factory=list)
    order_by_conjugates: GroupLattice | None = None

    @property
    def induced_agrees(self) -> bool:
        return self.induced == self.induced_closed_form

    @property
    def order_agrees(self) -> bool:
        return self.order_direct == self.order_closed_form

    @property
    def conjugates_agree(self) -> bool | None:
        if self.order_by_conjugates is None:
            return None
        return self.order_by_conjugates == self.order_direct

    def as_dict(self, names: dict | None = None) -> dict:
        return {
            "group": self.group.name,
            "induced": self.presentation.bracket(names),
            "order": self.order_presentation.bracket(names),
            "induced_agrees": self.induced_agrees,
            "order_agrees": self.order_agrees,
            "conjugates_agree": self.conjugates_agree,
            "is_ring": self.is_ring,
            "all_normal": self.all_normal,
        }


def induction_report(tp_H: TracePresentation, G: Group, *, conjugates: bool = True) -> InductionReport:
    """Direct versus closed-form induction of an H-level trace-sum order."""
    if not presentation_is_order(tp_H):
        raise PresentationError("the H-level presentation is not an order")
    M_H = from_presentation(tp_H)
    H_sub = Subgroup(G, (int(x) for x in tp_H.group.embedding))
    induced = induce_lattice(G, H_sub, M_H)
    tp_G = induced_presentation(tp_H, G)
    closed = from_presentation(tp_G)
    direct = associated_order(induced)
    tp_A = associated_order_of_induced(tp_H, G)
    conj = conjugate_intersection(closed) if conjugates else None
    return InductionReport(
        group=G, presentation=tp_G, induced=induced, induced_closed_form=closed,
        order_direct=direct, order_closed_form=from_presentation(tp_A),
        order_presentation=tp_A, is_ring=is_ring(closed), all_normal=tp_G.all_normal(),
        closures=normal_closures(tp_H, G), order_by_conjugates=conj,
    )


__all__ = [
    "induce_lattice", "induced_presentation", "associated_order_of_induced", "a_star",
    "conjugate_intersection", "InductionReport", "induction_report", "normalize_chain",
    "presentation_is_order", "normal_closures",
]
