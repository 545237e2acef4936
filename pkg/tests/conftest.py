"""Shared corpus generators for the test suite.

Everything here is deterministic: each helper takes an explicit
random.Random so a failing case can be replayed from the seed.
"""

import math
import random

import pytest

from reesgor import MonomialIdeal
from reesgor.oracle import oracle_clear_cache


def random_ideal(rng, dim, max_gens=5, max_coord=5):
    """A nonzero monomial ideal with a few random generators."""
    gens = []
    for _ in range(rng.randint(1, max_gens)):
        v = tuple(rng.randint(0, max_coord) for _ in range(dim))
        if any(v):
            gens.append(v)
    if not gens:
        gens.append(tuple(rng.randint(1, max_coord) for _ in range(dim)))
    return MonomialIdeal(dim, tuple(gens))


def random_m_primary(rng, dim, max_coord=5, extras=3):
    """Pure powers on every axis plus a few extra generators."""
    gens = []
    for i in range(dim):
        e = [0] * dim
        e[i] = rng.randint(1, max_coord)
        gens.append(tuple(e))
    for _ in range(rng.randint(0, extras)):
        v = tuple(rng.randint(0, max_coord) for _ in range(dim))
        if any(v):
            gens.append(v)
    return MonomialIdeal(dim, tuple(gens))


def single_facet_ideal(rng, dim, max_coord=5, extras=2):
    """An m-primary ideal whose Newton polyhedron has one bounded facet.

    Built as pure powers x_j^(a_j) plus extra generators sampled on or
    above the hyperplane through the a_j e_j, so the polyhedron is the
    simplex cone of the pure powers and the pure powers remain a
    reduction. Returns (ideal, pure_power_reduction).
    """
    exps = tuple(rng.randint(1, max_coord) for _ in range(dim))
    reduction = MonomialIdeal.pure_powers(exps)
    lcm = math.lcm(*exps)
    normal = tuple(lcm // a for a in exps)
    gens = list(reduction.gens)
    for _ in range(extras):
        v = tuple(rng.randint(0, max_coord) for _ in range(dim))
        if any(v) and sum(n * c for n, c in zip(normal, v)) >= lcm:
            gens.append(v)
    return MonomialIdeal(dim, tuple(gens)), reduction


def seeded(seed):
    return random.Random(seed)


@pytest.fixture(autouse=True)
def _fresh_oracle_cache():
    yield
    oracle_clear_cache()
