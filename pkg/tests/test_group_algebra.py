import random
from fractions import Fraction

import numpy as np
import pytest

from assocord.catalog import standard_group, subgroup
from assocord.group_algebra import (AlgebraElement, AlgebraError, conjugate_element, embed_element,
                                    idempotent, left_mult_matrix, multiply, regular_rep,
                                    right_mult_matrix, trace_element)
from assocord.groups import make_group


def _random_element(G, rng, den=1):
    return AlgebraElement(G, [rng.randint(-3, 3) for _ in range(G.order)], den)


@pytest.fixture(scope="module")
def S4():
    return standard_group("S4")


def test_normalization():
    G = make_group("C3")
    x = AlgebraElement(G, [2, 4, 6], 4)
    assert x.num == (1, 2, 3) and x.den == 2
    assert AlgebraElement(G, [1, 0, 0], -1) == -AlgebraElement.one(G)


def test_ring_axioms(S4):
    rng = random.Random(0)
    for _ in range(10):
        x, y, z = (_random_element(S4, rng, rng.randint(1, 4)) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        assert AlgebraElement.one(S4) * x == x == x * 1


def test_basis_products_follow_group_law(S4):
    for i in range(0, S4.order, 5):
        for j in range(0, S4.order, 7):
            prod = AlgebraElement.basis(S4, i) * AlgebraElement.basis(S4, j)
            assert prod == AlgebraElement.basis(S4, S4.mul(i, j))


def test_multiplication_matrices(S4):
    rng = random.Random(1)
    x, y = _random_element(S4, rng), _random_element(S4, rng)
    xv, yv = np.array(x.num, dtype=object), np.array(y.num, dtype=object)
    assert list(xv @ right_mult_matrix(yv, S4)) == list(multiply(x, y).num)
    assert list(yv @ left_mult_matrix(xv, S4)) == list(multiply(x, y).num)


def test_regular_representation_is_multiplicative():
    G = make_group("S3")
    rng = random.Random(2)
    x, y = _random_element(G, rng, 2), _random_element(G, rng, 3)
    lhs = regular_rep(x * y)
    rhs = regular_rep(x).dot(regular_rep(y))
    assert all(Fraction(a) == Fraction(b) for a, b in zip(lhs.ravel(), rhs.ravel()))


@pytest.mark.parametrize("name", ["V2", "V4", "C4", "D8", "A4", "C3"])
def test_trace_idempotents(S4, name):
    H = subgroup("S4", name)
    e = idempotent(H)
    assert e * e == e
    assert trace_element(H) * trace_element(H) == trace_element(H) * H.order
    assert e.is_central() == H.is_normal()


def test_conjugation(S4):
    H = subgroup("S4", "V2")
    g = S4.element("(1,2)")
    x = trace_element(H)
    gx = AlgebraElement.basis(S4, g)
    ginv = AlgebraElement.basis(S4, int(S4.inv[g]))
    assert conjugate_element(x, g) == gx * x * ginv


def test_embedding_is_a_ring_map(S4):
    D = subgroup("S4", "D8").as_group()
    rng = random.Random(3)
    x, y = _random_element(D, rng), _random_element(D, rng)
    assert embed_element(x * y, S4) == embed_element(x, S4) * embed_element(y, S4)


def test_mixing_groups_fails():
    with pytest.raises(AlgebraError):
        AlgebraElement.one(make_group("C2")) + AlgebraElement.one(make_group("C3"))
