"""Shared builders for the test modules."""

from __future__ import annotations

import random
from functools import lru_cache

from assocord.catalog import standard_group
from assocord.groups import Subgroup
from assocord.lattices import TracePresentation


def vp(n: int, p: int) -> int:
    k = 0
    while n % p == 0:
        n //= p
        k += 1
    return k


@lru_cache(maxsize=None)
def subgroup_list(label: str) -> tuple[Subgroup, ...]:
    return tuple(standard_group(label).all_subgroups())


def random_chain_case(rng: random.Random, labels=("A4", "S4", "D8", "A5")):
    """A random ``(G, H, tp_H)`` with ``tp_H`` a trace-sum order over H.

    The chain ``{e} < P_1 < ... < P_r`` consists of subgroups normal in H with
    strictly increasing exponents ``n_i <= v_p(|P_i|)``.
    """
    while True:
        label = rng.choice(labels)
        G = standard_group(label)
        H = rng.choice([S for S in subgroup_list(label) if S.order > 1])
        primes = [q for q in (2, 3, 5) if H.order % q == 0]
        p = rng.choice(primes)
        Hg = H.as_group()
        normals = [P for P in Hg.all_subgroups() if P.order > 1 and P.is_normal() and P.order % p == 0]
        if not normals:
            continue
        chain, n = [(0, Hg.trivial)], 0
        for P in sorted(normals, key=lambda S: S.order):
            if rng.random() < 0.5:
                continue
            top = chain[-1][1]
            if not (top <= P and top.order < P.order):
                continue
            if n + 1 > vp(P.order, p):
                continue
            n = rng.randint(n + 1, vp(P.order, p))
            chain.append((n, P))
        if len(chain) == 1:
            continue
        return G, H, TracePresentation(Hg, p, chain)


def _shape_check(label: str, index: int):
    from assocord.classifier import end_to_end_check, reference_shapes
    return end_to_end_check(label, reference_shapes(label)[index].profile)


@lru_cache(maxsize=None)
def shape_results(label: str, jobs: int = 1):
    """``(shape, end_to_end result)`` for every reference shape of a group, computed once."""
    from concurrent.futures import ProcessPoolExecutor

    from assocord.classifier import reference_shapes
    shapes = reference_shapes(label)
    idx = range(len(shapes))
    if jobs <= 1:
        results = [_shape_check(label, i) for i in idx]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_shape_check, [label] * len(shapes), idx))
    return tuple(zip(shapes, results))
