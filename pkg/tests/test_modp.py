import random

import numpy as np
import pytest
from sympy import GF, Matrix
from sympy.polys.matrices import DomainMatrix

from assocord.modp import Subspace, left_nullspace, nullspace, rank, rref


def _random_matrix(rng, r, c, p):
    return np.array([[rng.randrange(p) for _ in range(c)] for _ in range(r)], dtype=np.int64)


def _sympy_rank(A, p):
    return DomainMatrix.from_Matrix(Matrix(A.tolist())).convert_to(GF(p)).rank()


@pytest.mark.parametrize("p", [2, 3, 5, 7])
@pytest.mark.parametrize("seed", range(5))
def test_rank_and_nullspace(p, seed):
    rng = random.Random(seed * 31 + p)
    A = _random_matrix(rng, rng.randint(2, 7), rng.randint(2, 7), p)
    # make some rows dependent
    if A.shape[0] > 2:
        A[-1] = (A[0] + 2 * A[1]) % p
    r = rank(A, p)
    assert r == _sympy_rank(A, p)
    N = nullspace(A, p)
    assert N.shape[0] == A.shape[1] - r
    assert not np.any(A @ N.T % p)
    L = left_nullspace(A, p)
    assert L.shape[0] == A.shape[0] - r
    assert not np.any(L @ A % p)


def test_rref_is_reduced():
    rng = random.Random(3)
    A = _random_matrix(rng, 5, 6, 5)
    R, piv = rref(A, 5)
    for i, c in enumerate(piv):
        assert R[i, c] == 1
        assert all(R[k, c] == 0 for k in range(R.shape[0]) if k != i)


def test_subspace_quotient():
    S = Subspace(4, 3, np.array([[1, 2, 0, 0], [0, 0, 1, 1]]))
    assert S.dim == 2
    assert S.contains(np.array([2, 1, 2, 2]))
    assert not S.contains(np.array([0, 1, 0, 0]))
    comp, proj = S.quotient_map()
    assert len(comp) == 2
    assert not np.any(proj(np.array([1, 2, 1, 1])))
    S.extend(np.array([[0, 1, 0, 0]]))
    assert S.dim == 3
