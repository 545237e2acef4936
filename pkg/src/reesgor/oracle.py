"""Slow reference implementations used to cross-check the main code.

Everything in this module is deliberately naive: membership by direct
divisibility, ideal operations by enumerating lattice points in a box,
powers by a memoized recursion on the defining property of a product.
None of it calls the algorithmic routines in the rest of the package,
so an agreement between the two is evidence, not a tautology. Inputs
are read only for their generator data.

Enumerations refuse to run past a point budget and raise
BudgetExceededError instead of silently truncating.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, List, Sequence, Tuple

from .errors import BudgetExceededError
from .ideals import MonomialIdeal

Vector = Tuple[int, ...]

DEFAULT_BUDGET = 10_000_000


@dataclass(frozen=True)
class Box:
    """The integer box prod_j [0, bounds_j], with a point budget."""

    bounds: Tuple[int, ...]
    budget: int = DEFAULT_BUDGET

    @property
    def size(self) -> int:
        n = 1
        for b in self.bounds:
            n *= b + 1
        return n

    def points(self) -> Iterator[Vector]:
        if self.size > self.budget:
            raise BudgetExceededError(
                f"box {self.bounds} holds {self.size} points, "
                f"budget is {self.budget}"
            )
        return itertools.product(*(range(b + 1) for b in self.bounds))


def _divides_some(v: Vector, gens: Sequence[Vector]) -> bool:
    return any(all(g[i] <= v[i] for i in range(len(v))) for g in gens)


def _minimal_members(members: set) -> Tuple[Vector, ...]:
    """Minimal elements of an up-set, via down-neighbor probing."""
    minimal = []
    for v in members:
        is_min = True
        for j in range(len(v)):
            if v[j] > 0:
                down = v[:j] + (v[j] - 1,) + v[j + 1 :]
                if down in members:
                    is_min = False
                    break
        if is_min:
            minimal.append(v)
    return tuple(sorted(minimal))


@lru_cache(maxsize=None)
def _power_member(v: Vector, gens: Tuple[Vector, ...], n: int) -> bool:
    if n <= 0:
        return True
    for g in gens:
        w = tuple(a - b for a, b in zip(v, g))
        if all(c >= 0 for c in w) and _power_member(w, gens, n - 1):
            return True
    return False


def oracle_power_member(v: Sequence[int], ideal: MonomialIdeal, n: int) -> bool:
    """Is x^v in ideal^n? Decided by the recursion: v is in I^n iff
    some generator g divides x^v with the cofactor in I^(n-1)."""
    return _power_member(tuple(v), ideal.gens, n)


def oracle_iclosure_member(
    v: Sequence[int], ideal: MonomialIdeal, k_max: int, power: int = 1
) -> bool:
    """Is x^v integral over ideal^power?

    Uses the valuative test: v lies in the integral closure iff
    k*v is in (I^power)^k = I^(power*k) for some k >= 1. The caller
    must supply a k_max known to suffice for a definitive "no" (a
    common multiple of the facet denominators of the Newton polyhedron
    works); within the scan the first hit answers "yes" early.
    """
    if k_max < 1:
        raise ValueError("k_max must be at least 1")
    w = tuple(v)
    for k in range(1, k_max + 1):
        scaled = tuple(k * c for c in w)
        if _power_member(scaled, ideal.gens, power * k):
            return True
    return False


def oracle_colon(
    ideal: MonomialIdeal, divisor: MonomialIdeal, budget: int = DEFAULT_BUDGET
) -> Tuple[Vector, ...]:
    """Minimal generators of (ideal : divisor), found by scanning the
    bounding box of ideal's generators for vectors v with v + g in the
    ideal for every generator g of the divisor."""
    bounds = tuple(
        max((g[i] for g in ideal.gens), default=0) for i in range(ideal.dim)
    )
    members = set()
    for v in Box(bounds, budget).points():
        ok = True
        for g in divisor.gens:
            shifted = tuple(a + b for a, b in zip(v, g))
            if not _divides_some(shifted, ideal.gens):
                ok = False
                break
        if ok:
            members.add(v)
    return _minimal_members(members)


def oracle_intersect(
    left: MonomialIdeal, right: MonomialIdeal, budget: int = DEFAULT_BUDGET
) -> Tuple[Vector, ...]:
    """Minimal generators of the intersection, by scanning the joint
    bounding box for points lying in both ideals."""
    bounds = tuple(
        max(
            max((g[i] for g in left.gens), default=0),
            max((g[i] for g in right.gens), default=0),
        )
        for i in range(left.dim)
    )
    members = set()
    for v in Box(bounds, budget).points():
        if _divides_some(v, left.gens) and _divides_some(v, right.gens):
            members.add(v)
    return _minimal_members(members)


def oracle_relint_points(
    rows: Sequence[Sequence[int]],
    bounds: Sequence[int],
    budget: int = DEFAULT_BUDGET,
) -> List[Vector]:
    """All lattice points v in the box with <row, v> >= 1 for every
    row, i.e. the relative interior points of the cone cut out by the
    rows (assuming the rows are exactly its facets)."""
    found = []
    for v in Box(tuple(bounds), budget).points():
        if all(sum(r * c for r, c in zip(row, v)) >= 1 for row in rows):
            found.append(v)
    return sorted(found)


def oracle_clear_cache() -> None:
    """Drop the power-membership memo (tests with many ideals)."""
    _power_member.cache_clear()
