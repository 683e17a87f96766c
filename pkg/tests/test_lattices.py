import random
from fractions import Fraction

import numpy as np
import pytest

from assocord.catalog import A5_TABLE_2, S4_TABLE, names_for, presentation, standard_group, subgroup
from assocord.group_algebra import AlgebraElement, trace_element
from assocord.groups import make_group
from assocord.lattices import (GroupLattice, LatticeError, PresentationError, TracePresentation,
                               associated_order, colon, equal_at_p, from_presentation, group_ring,
                               index_valuation, intersection, is_ring, lattice_from_generators,
                               lattice_sum, product_lattice, reconstruct_presentation,
                               right_multiplier_order)


def _random_lattice(G, rng, gens=2, den=4):
    elems = [AlgebraElement(G, [rng.randint(-2, 2) for _ in range(G.order)], rng.randint(1, den))
             for _ in range(gens)]
    elems.append(AlgebraElement.one(G))
    return lattice_from_generators(elems, "ZG")


@pytest.fixture(scope="module")
def S3():
    return make_group("S3")


def test_group_ring_is_its_own_order():
    G = standard_group("A5")
    ZG = group_ring(G)
    assert associated_order(ZG) == ZG
    assert is_ring(ZG)


def test_span_and_membership(S3):
    x = trace_element(S3.whole) / 2
    L = lattice_from_generators([AlgebraElement.one(S3), x], "ZG")
    assert L.is_full and L.den == 2
    assert x in L
    assert (x / 2) not in L
    assert L.contains(group_ring(S3)) and not group_ring(S3).contains(L)


def test_dump_round_trip():
    L = presentation("S4", 2, [(1, "V2"), (2, "C4")]).lattice()
    assert GroupLattice.parse_dump(L.group, L.dump()) == L


@pytest.mark.parametrize("seed", range(6))
def test_colon_is_the_largest_multiplier(S3, seed):
    rng = random.Random(seed)
    M, N = _random_lattice(S3, rng), _random_lattice(S3, rng)
    C = colon(M, N)
    # every basis element maps N into M
    for x in C.elements():
        assert M.contains(lattice_from_generators([x * y for y in N.elements()]))
    # and slightly larger elements do not all do so
    for x in C.elements():
        bigger = lattice_sum(C, lattice_from_generators([x / 2]))
        if bigger != C:
            assert not all(M.contains(lattice_from_generators([z * y for y in N.elements()]))
                           for z in bigger.elements())


@pytest.mark.parametrize("seed", range(6))
def test_associated_orders_are_rings_containing_group_ring(S3, seed):
    M = _random_lattice(S3, random.Random(10 + seed), gens=3)
    A = associated_order(M)
    assert is_ring(A) and A.contains(group_ring(S3))
    # M is only a left module, so the right order need not contain Z[G]
    assert is_ring(right_multiplier_order(M))


def test_product_and_sum(S3):
    rng = random.Random(5)
    M, N = _random_lattice(S3, rng), _random_lattice(S3, rng)
    P = product_lattice(M, N)
    assert colon(P, N).contains(M)
    S = M + N
    assert S.contains(M) and S.contains(N)


def test_intersection_and_dual(S3):
    rng = random.Random(6)
    M, N = _random_lattice(S3, rng), _random_lattice(S3, rng)
    I = intersection(M, N)
    assert M.contains(I) and N.contains(I)
    assert I.dual().dual() == I
    # pairing of I with its dual is integral
    for x in I.elements():
        for y in I.dual().elements():
            assert sum(Fraction(a, x.den) * Fraction(b, y.den) for a, b in zip(x.num, y.num)).denominator == 1


def test_index_valuation_and_local_equality():
    G = standard_group("S4")
    ZG = group_ring(G)
    L = presentation("S4", 2, [(1, "V4")]).lattice()
    # Z[G] Tr_V4 is saturated of rank [G:V4] = 6, so halving it gives index 2^6
    assert index_valuation(L, ZG, 2) == 6
    assert equal_at_p(L, ZG, 3)
    assert not equal_at_p(L, ZG, 2)


@pytest.mark.parametrize("row", S4_TABLE + A5_TABLE_2, ids=lambda r: f"{r.group}-{r.row}")
def test_table_orders_are_colon_orders(row):
    M = row.lattice_presentation().lattice()
    A = associated_order(M)
    assert A == row.order_presentation().lattice()
    assert reconstruct_presentation(A, row.p) == row.order_presentation()


def test_presentation_strings():
    tp = presentation("S4", 2, [(1, "V2"), (2, "C4"), (3, "D8")])
    names = names_for("S4")
    assert tp.bracket(names) == "<1, 1/2Tr(V2), 1/4Tr(C4), 1/8Tr(D8)>"
    assert tp.expression("S4", names) == "Z[S4] + (1/2)Z[S4]Tr(V2) + (1/4)Z[S4]Tr(C4) + (1/8)Z[S4]Tr(D8)"


def test_from_presentation_is_the_trace_sum():
    tp = presentation("S4", 2, [(1, "V2"), (2, "V4")])
    G = tp.group
    gens = [trace_element(P) / 2 ** n for n, P in tp.levels]
    assert from_presentation(tp) == lattice_from_generators(gens, "ZG")


def test_presentation_validation():
    G = standard_group("S4")
    V2, V4 = subgroup("S4", "V2"), subgroup("S4", "V4")
    with pytest.raises(PresentationError):
        TracePresentation(G, 4, [(0, G.trivial)])
    with pytest.raises(PresentationError):
        TracePresentation(G, 2, [(0, G.trivial), (1, V4), (2, V2)])
    with pytest.raises(PresentationError):
        TracePresentation(G, 2, [(0, G.trivial), (2, V2), (2, V4)])
    with pytest.raises(PresentationError):
        TracePresentation(G, 2, [(1, V2)])


def test_reconstruct_rejects_other_shapes(S3):
    L = lattice_from_generators([AlgebraElement.one(S3), AlgebraElement.basis(S3, 1) / 2], "ZG")
    assert reconstruct_presentation(L, 2) is None


def test_scaling_and_errors(S3):
    L = group_ring(S3)
    assert L.scale(Fraction(1, 3)).den == 3
    with pytest.raises(LatticeError):
        L.scale(0)
    thin = lattice_from_generators([AlgebraElement.one(S3)])
    assert not thin.is_full
    with pytest.raises(LatticeError):
        associated_order(thin)
