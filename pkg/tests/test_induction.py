import random

import pytest

from assocord.catalog import names_for, standard_group, subgroup
from assocord.classifier import local_presentation, reference_shapes
from assocord.group_algebra import AlgebraElement
from assocord.groups import GroupError, restrict_subgroup
from assocord.induction import (a_star, associated_order_of_induced, conjugate_intersection,
                                induce_lattice, induction_report, normalize_chain,
                                presentation_is_order)
from assocord.lattices import (PresentationError, TracePresentation, associated_order,
                               from_presentation, group_ring, is_ring, lattice_from_generators)

from helpers import random_chain_case

RANDOM_CASES = 60
TABLE_SHAPES = [sh for sh in reference_shapes() if sh.row is not None]


def _check_report(rep):
    assert rep.induced_agrees, "induced lattice differs from the trace-sum closed form"
    assert rep.order_agrees, "colon order differs from the normal-closure closed form"
    assert rep.is_ring == rep.all_normal
    assert rep.conjugates_agree is not False


@pytest.mark.parametrize("shape", TABLE_SHAPES, ids=lambda s: f"{s.group}-{s.row}-{s.name}")
def test_table_shapes(shape):
    tp = local_presentation(shape.profile)
    rep = induction_report(tp, shape.profile.group)
    _check_report(rep)


@pytest.mark.parametrize("seed", range(RANDOM_CASES))
def test_random_chains(seed):
    G, H, tp = random_chain_case(random.Random(seed))
    _check_report(induction_report(tp, G))


def test_random_cases_cover_all_groups():
    labels = {random_chain_case(random.Random(s))[0].name for s in range(RANDOM_CASES)}
    assert labels == {"A4", "S4", "D8", "A5"}


def test_ring_criterion_both_directions():
    G = standard_group("S4")
    D8 = subgroup("S4", "D8")
    Dg = D8.as_group()
    V2 = restrict_subgroup(Dg, subgroup("S4", "V2"))
    V4 = restrict_subgroup(Dg, subgroup("S4", "V4"))
    non_normal = induction_report(TracePresentation(Dg, 2, [(0, Dg.trivial), (1, V2)]), G)
    normal = induction_report(TracePresentation(Dg, 2, [(0, Dg.trivial), (1, V4)]), G)
    assert not non_normal.all_normal and not non_normal.is_ring
    assert normal.all_normal and normal.is_ring
    names = names_for("S4")
    assert non_normal.order_presentation.bracket(names) == "<1, 1/2Tr(V4)>"


@pytest.mark.parametrize("name", ["D8", "S3", "C4", "V2", "A4"])
@pytest.mark.parametrize("seed", range(2))
def test_intersection_identity_for_arbitrary_lattices(name, seed):
    G = standard_group("S4")
    H = subgroup("S4", name)
    Hg = H.as_group()
    rng = random.Random(seed)
    gens = [AlgebraElement(Hg, [rng.randint(-2, 2) for _ in range(Hg.order)], rng.randint(1, 4))
            for _ in range(2)] + [AlgebraElement.one(Hg)]
    M = lattice_from_generators(gens, "ZG")
    A = associated_order(M)
    direct = associated_order(induce_lattice(G, H, M))
    assert direct == conjugate_intersection(induce_lattice(G, H, A))


def test_induction_of_group_ring():
    G = standard_group("A5")
    H = subgroup("A5", "D10")
    assert induce_lattice(G, H, group_ring(H.as_group())) == group_ring(G)


def test_a_star_for_normal_subgroup():
    G = standard_group("S4")
    V4 = subgroup("S4", "V4")
    Vg = V4.as_group()
    V2 = restrict_subgroup(Vg, subgroup("S4", "V2"))
    M = from_presentation(TracePresentation(Vg, 2, [(0, Vg.trivial), (1, V2)]))
    S = a_star(G, V4, M)
    assert is_ring(S) and associated_order(M).contains(S)
    # the conjugates of V2 inside V4 are the three order-2 subgroups, so only Z[V4] + (1/2)Z[V4]Tr(V4) survives
    expected = from_presentation(TracePresentation(Vg, 2, [(0, Vg.trivial), (1, Vg.whole)]))
    assert S == expected


def test_normalize_chain_and_closure():
    G = standard_group("S4")
    V4, D8 = subgroup("S4", "V4"), subgroup("S4", "D8")
    levels = [(0, G.trivial), (1, V4), (2, V4), (3, G.whole)]
    assert normalize_chain(levels) == [(0, G.trivial), (2, V4), (3, G.whole)]
    tp = TracePresentation(G, 2, [(0, G.trivial), (1, subgroup("S4", "V2")), (3, D8)])
    assert associated_order_of_induced(tp, G).bracket(names_for("S4")) == "<1, 1/2Tr(V4), 1/8Tr(G)>"


def test_presentation_is_order():
    G = standard_group("S4")
    assert presentation_is_order(TracePresentation(G, 2, [(0, G.trivial), (2, subgroup("S4", "V4"))]))
    assert not presentation_is_order(TracePresentation(G, 2, [(0, G.trivial), (3, subgroup("S4", "V4"))]))
    assert not presentation_is_order(TracePresentation(G, 2, [(0, G.trivial), (1, subgroup("S4", "V2"))]))
    with pytest.raises(PresentationError):
        induction_report(TracePresentation(G, 2, [(0, G.trivial), (3, subgroup("S4", "V4"))]), G)


def test_wrong_subgroup_is_rejected():
    G = standard_group("S4")
    other = standard_group("A4")
    with pytest.raises((GroupError, ValueError)):
        induce_lattice(G, other.whole, group_ring(other))
