import itertools
import random
from fractions import Fraction

import numpy as np
import pytest

from assocord.catalog import S4_CASES, S4_M11_GENERATOR, S4_TABLE, standard_group, subgroup
from assocord.group_algebra import AlgebraElement
from assocord.groups import GroupError, dihedral, make_group
from assocord.lattices import (GroupLattice, associated_order, equal_at_p, group_ring,
                               lattice_from_generators)
from assocord.local_freeness import (_image_lattice, action_matrices, hom_dimension, hybrid_check,
                                     is_free_over_associated_order, is_nilpotent,
                                     is_two_sided_ideal, maximality_certificate, mod_p_algebra,
                                     quotient_algebra, radical, randomized_iso_search)
from assocord.modp import Subspace
from assocord.parsing import parse_element

from helpers import random_chain_case


def _brute_radical(B):
    """``{x : x y nilpotent for every y}``, by enumerating the whole algebra."""
    elems = [np.array(v, dtype=np.int64) for v in itertools.product(range(B.p), repeat=B.dim)]
    return {tuple(x) for x in elems if all(is_nilpotent(B, B.multiply(x, y)) for y in elems)}


def _span(rows, p, n):
    if len(rows) == 0:
        return {(0,) * n}
    out = set()
    for c in itertools.product(range(p), repeat=len(rows)):
        out.add(tuple(int(v) for v in (np.array(c) @ np.asarray(rows)) % p))
    return out


def _small_algebras():
    S3, C4, V4 = make_group("S3"), make_group("C4"), make_group("V4")
    hybrid = lattice_from_generators([AlgebraElement.one(V4), AlgebraElement(V4, [1] * 4, 2)], "ZG")
    return [("F2[S3]", group_ring(S3), 2), ("F3[S3]", group_ring(S3), 3), ("F2[C4]", group_ring(C4), 2),
            ("F5[C4]", group_ring(C4), 5), ("Z[V4]+Tr/2 at 2", hybrid, 2)]


@pytest.mark.parametrize("name,order,p", _small_algebras(), ids=lambda v: v if isinstance(v, str) else "")
def test_radical_matches_brute_force(name, order, p):
    B = mod_p_algebra(order, p)
    J = radical(B)
    assert _span(J, p, B.dim) == _brute_radical(B)


@pytest.mark.parametrize("row", S4_TABLE[:4] + S4_TABLE[-3:], ids=lambda r: r.row)
def test_radical_is_nilpotent_with_semisimple_quotient(row):
    order = row.order_presentation().lattice()
    B = mod_p_algebra(order, 2)
    assert B.is_associative() and B.has_identity()
    J = radical(B)
    assert is_two_sided_ideal(B, J)
    # J is nilpotent: J^k = 0 for some k <= dim
    S = Subspace(B.dim, 2, J)
    power = J
    for _ in range(B.dim + 1):
        if power.shape[0] == 0:
            break
        prods = np.array([B.multiply(a, b) for a in power for b in J]).reshape(-1, B.dim)
        power = Subspace(B.dim, 2, prods).basis
    assert power.shape[0] == 0
    assert S.dim == J.shape[0]
    Q = quotient_algebra(B, J)
    assert radical(Q).shape[0] == 0


def test_hom_dimension_of_regular_module():
    B = mod_p_algebra(group_ring(make_group("S3")), 3)
    acts = np.stack([B.table[a] for a in range(B.dim)])
    assert hom_dimension(acts, acts, 3) == B.dim


@pytest.mark.parametrize("seed", range(8))
def test_orders_are_free_over_themselves(seed):
    G, H, tp = random_chain_case(random.Random(seed), labels=("A4", "S4", "D8"))
    order = associated_order(tp.lattice()) if tp.group is G else tp.lattice()
    rep = is_free_over_associated_order(order, tp.p)
    assert rep.free
    assert associated_order(order) == order


@pytest.mark.parametrize("row", S4_TABLE, ids=lambda r: r.row)
def test_table_orders_free_and_lattices_not(row):
    order = row.order_presentation().lattice()
    assert is_free_over_associated_order(order, 2).free
    assert not is_free_over_associated_order(row.lattice_presentation().lattice(), 2).free


def _unimodular(n, rng):
    U = np.eye(n, dtype=object)
    for _ in range(3 * n):
        i, j = rng.sample(range(n), 2)
        U[i] = U[i] + rng.randint(-2, 2) * U[j]
    return U


@pytest.mark.parametrize("case", [S4_CASES[4], S4_CASES[8], S4_CASES[10]], ids=lambda c: c.label)
def test_freeness_invariant_under_scaling_and_basis_change(case):
    M = case.lattice_presentation().lattice()
    base = is_free_over_associated_order(M, 2)
    rng = random.Random(7)
    for c in (Fraction(3), Fraction(1, 2), Fraction(5, 4)):
        scaled = M.scale(c)
        rep = is_free_over_associated_order(scaled, 2)
        assert associated_order(scaled) == base.order
        assert (rep.free, rep.hom_dims) == (base.free, base.hom_dims)
    U = _unimodular(M.rank, rng)
    rows = U @ M.basis.astype(object)
    assert not np.array_equal(rows, M.basis.astype(object))
    moved = GroupLattice(M.group, rows, M.den)
    assert moved == M
    assert is_free_over_associated_order(moved, 2).free == base.free
    # a right translate by a group element is an isomorphic left module
    G = M.group
    g = AlgebraElement.basis(G, G.element("(1,2,3)"))
    assert is_free_over_associated_order(_image_lattice(M, g), 2).free == base.free


def test_lattices_free_at_primes_prime_to_the_order():
    G = standard_group("S4")
    M = S4_CASES[0].lattice_presentation().lattice()
    assert is_free_over_associated_order(M, 5).free
    assert maximality_certificate(group_ring(G), 5) == "maximal"
    assert maximality_certificate(group_ring(G), 3) == "inconclusive"


def test_known_witness_for_the_free_lattice():
    case = S4_CASES[10]
    M = case.lattice_presentation().lattice()
    A = associated_order(M)
    x = parse_element(S4_M11_GENERATOR, M.group)
    assert equal_at_p(_image_lattice(M, x), A, 2)


def test_random_witness_is_verified():
    case = S4_CASES[10]
    M = case.lattice_presentation().lattice()
    A = associated_order(M)
    res = randomized_iso_search(M, A, 2, attempts=2000, seed=0)
    assert res.isomorphic is True and res.label() == "isomorphic"
    assert equal_at_p(_image_lattice(M, res.witness), A, 2)
    # and a witness for a non-free lattice is never produced
    N = S4_CASES[0].lattice_presentation().lattice()
    res = randomized_iso_search(N, associated_order(N), 2, attempts=200, seed=0)
    assert res.witness is None and res.isomorphic is not True


def test_action_matrices_shape():
    M = S4_CASES[8].lattice_presentation().lattice()
    A = associated_order(M)
    T = action_matrices(A, M, 2)
    assert T.shape == (24, 24, 24)


@pytest.mark.parametrize("label,sub,p", [("A4", "V4", 3), ("S4", "V4", 3)])
def test_hybrid_examples(label, sub, p):
    assert hybrid_check(standard_group(label), subgroup(label, sub), p)


@pytest.mark.parametrize("n", range(3, 16, 2))
def test_hybrid_dihedral(n):
    G = dihedral(2 * n)
    N = G.subgroup([tuple((i + 1) % n for i in range(n))])
    assert N.order == n and N.is_normal()
    assert hybrid_check(G, N, 2)


@pytest.mark.parametrize("label,p", [("S4", 2), ("A4", 2), ("A5", 2), ("A5", 3), ("A5", 5), ("D8", 2)])
def test_hybrid_false_when_p_divides_n(label, p):
    G = standard_group(label)
    for N in G.normal_subgroups():
        if N.order % p == 0:
            assert not hybrid_check(G, N, p)


def test_hybrid_rejects_non_normal():
    with pytest.raises(GroupError):
        hybrid_check(standard_group("S4"), subgroup("S4", "V2"), 3)
