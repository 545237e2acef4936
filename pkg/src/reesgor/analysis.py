"""Reductions of monomial ideals and the invariants derived from them.

The objects here live on the algebra side: reduction numbers, indexes
of nilpotency (adic and integrally closed), colon-ideal tests for the
quasi-Gorenstein and Cohen-Macaulay properties of the extended Rees
algebra, cores of powers, and the conductor exponent that measures how
far the closure filtration sits inside the adic one.

Two implementation rules hold throughout. First, everything that has
two independent characterizations is computed both ways and compared;
a mismatch raises InvariantViolationError with the witness instead of
picking a side. Second, every scan with a theoretical stopping bound
enforces that bound and raises rather than looping on.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from .errors import (
    InapplicableError,
    InvariantViolationError,
    NotAReductionError,
    StabilizationError,
)
from .ideals import MonomialIdeal
from .polyhedra import FacetSystem, closure_power, newton_polyhedron


def powers_upto(ideal: MonomialIdeal, n: int) -> List[MonomialIdeal]:
    """[ideal^0, ideal^1, ..., ideal^n] by successive products."""
    out = [MonomialIdeal.unit(ideal.dim)]
    for _ in range(n):
        out.append(out[-1] * ideal)
    return out


def is_monomial_reduction(
    candidate: MonomialIdeal, ideal: MonomialIdeal, power_horizon: int = 20
) -> bool:
    """Is candidate a reduction of ideal (candidate * ideal^n equals
    ideal^(n+1) for some n)?

    Decided on the Newton polyhedra: a subideal is a reduction iff the
    two polyhedra coincide. The power characterization is evaluated as
    well, up to power_horizon, and the two answers must agree; if they
    do not, something is broken and InvariantViolationError reports it.
    Candidates that are not contained in the ideal are rejected with
    NotAReductionError before any geometry runs.
    """
    if not candidate.is_subset(ideal):
        raise NotAReductionError(
            f"{candidate.to_str()} is not contained in {ideal.to_str()}"
        )
    np_equal = newton_polyhedron(candidate) == newton_polyhedron(ideal)

    power_equal = False
    current = MonomialIdeal.unit(ideal.dim)  # ideal^n
    for _ in range(power_horizon + 1):
        nxt = current * ideal
        if candidate * current == nxt:
            power_equal = True
            break
        current = nxt
    if np_equal != power_equal:
        raise InvariantViolationError(
            f"reduction tests disagree for {candidate.to_str()} in "
            f"{ideal.to_str()}: polyhedra say {np_equal}, powers up to "
            f"{power_horizon} say {power_equal}"
        )
    return np_equal


def find_pure_power_reduction(
    ideal: MonomialIdeal, facets: Optional[FacetSystem] = None
) -> Optional[MonomialIdeal]:
    """The pure-power reduction read off the Newton polyhedron, if the
    polyhedron has a single bounded facet.

    For a facet <a, x> >= h the candidate is generated by x_j^(c_j)
    with c_j = ceil(h / a_j), the smallest pure powers on the facet or
    beyond it. Returns None when the polyhedron has several bounded
    facets, when some candidate generator is not in the ideal, or when
    the candidate fails the reduction test.
    """
    if facets is None:
        facets = newton_polyhedron(ideal)
    if len(facets.bounded) != 1 or not facets.is_m_primary_source():
        return None
    facet = facets.bounded[0]
    exps = tuple(-(-facet.offset // a) for a in facet.normal)
    candidate = MonomialIdeal.pure_powers(exps)
    if not candidate.is_subset(ideal):
        return None
    if not is_monomial_reduction(candidate, ideal):
        return None
    return candidate


def reduction_number(
    ideal: MonomialIdeal, reduction: MonomialIdeal, guard: int = 60
) -> int:
    """The least n with reduction * ideal^n == ideal^(n+1). Validates
    that the argument really is a reduction first."""
    if not is_monomial_reduction(reduction, ideal):
        raise NotAReductionError(
            f"{reduction.to_str()} is not a reduction of {ideal.to_str()}"
        )
    current = MonomialIdeal.unit(ideal.dim)  # ideal^n
    for n in range(guard + 1):
        nxt = current * ideal
        if reduction * current == nxt:
            return n
        current = nxt
    raise InvariantViolationError(
        f"confirmed reduction did not absorb a power by n = {guard}"
    )


def nilpotency_index(
    ideal: MonomialIdeal, reduction: MonomialIdeal, r: Optional[int] = None
) -> int:
    """The least i with ideal^(i+1) contained in the reduction. It
    never exceeds the reduction number, and the scan enforces that."""
    if r is None:
        r = reduction_number(ideal, reduction)
    power = ideal  # ideal^(i+1)
    for i in range(r + 1):
        if power.is_subset(reduction):
            return i
        power = power * ideal
    raise InvariantViolationError(
        f"nilpotency index exceeds the reduction number {r}"
    )


def closure_nilpotency_index(
    ideal: MonomialIdeal,
    reduction: MonomialIdeal,
    facets: Optional[FacetSystem] = None,
    guard: Optional[int] = None,
) -> int:
    """The least i with the integral closure of ideal^(i+1) contained
    in the reduction (the nilpotency index of the closure filtration)."""
    if facets is None:
        facets = newton_polyhedron(ideal)
    if guard is None:
        guard = reduction_number(ideal, reduction) + ideal.dim + 10
    for i in range(guard + 1):
        if closure_power(ideal, i + 1, facets).is_subset(reduction):
            return i
    raise StabilizationError(
        f"closure filtration not inside the reduction by step {guard}"
    )


@dataclass(frozen=True)
class ReductionData:
    """The basic invariants of an ideal relative to a reduction."""

    ideal: MonomialIdeal
    reduction: MonomialIdeal
    reduction_number: int
    nilpotency_index: int
    closure_nilpotency_index: int
    generator_count: int


def analyze_reduction(
    ideal: MonomialIdeal,
    reduction: Optional[MonomialIdeal] = None,
    facets: Optional[FacetSystem] = None,
) -> ReductionData:
    """Bundle r, s, and the closure index for a reduction (found
    automatically when not supplied)."""
    if facets is None:
        facets = newton_polyhedron(ideal)
    if reduction is None:
        reduction = find_pure_power_reduction(ideal, facets)
        if reduction is None:
            raise InapplicableError(
                "no pure-power reduction: the Newton polyhedron has "
                "more than one bounded facet"
            )
    r = reduction_number(ideal, reduction)
    s = nilpotency_index(ideal, reduction, r)
    s_bar = closure_nilpotency_index(ideal, reduction, facets)
    return ReductionData(
        ideal=ideal,
        reduction=reduction,
        reduction_number=r,
        nilpotency_index=s,
        closure_nilpotency_index=s_bar,
        generator_count=len(reduction.gens),
    )


def canonical_piece(
    reduction: MonomialIdeal, ideal: MonomialIdeal, i: int, k: int
) -> MonomialIdeal:
    """The graded piece reduction^(i+k) : ideal^k of the canonical
    module of the extended Rees algebra (unit ideal when i + k <= 0).

    Requires a pure-power reduction (so its minimal generator count
    equals the dimension) and k at least the reduction number; the
    value is then independent of k, which is verified at k, k+1, k+2.
    """
    if reduction.pure_power_exponents() is None:
        raise InapplicableError(
            "canonical pieces need a reduction generated by pure powers"
        )
    r = reduction_number(ideal, reduction)
    if k < r:
        raise InapplicableError(
            f"k = {k} is below the reduction number {r}"
        )

    def piece(kk: int) -> MonomialIdeal:
        if i + kk <= 0:
            return MonomialIdeal.unit(ideal.dim)
        return (reduction ** (i + kk)).colon(ideal ** kk)

    value = piece(k)
    for kk in (k + 1, k + 2):
        other = piece(kk)
        if other != value:
            raise InvariantViolationError(
                f"canonical piece depends on k: {value.to_str()} at "
                f"{k} vs {other.to_str()} at {kk}"
            )
    return value


@dataclass(frozen=True)
class QGVerdict:
    """Outcome of the quasi-Gorenstein colon test.

    When the verdict is positive, `a` is the unique degree making the
    colon pattern reduction^i : ideal^r == ideal^(i - u) hold over the
    checked window, with u = r - d + 1 - a; `probe_ok` records the
    stabilization probe past the window edge.
    """

    quasi_gorenstein: bool
    a: Optional[int]
    u: Optional[int]
    reduction: MonomialIdeal
    reduction_number: int
    nilpotency_index: int
    checked_range: Tuple[int, int]
    probe_ok: Optional[bool]


def quasi_gorenstein_test(
    ideal: MonomialIdeal, reduction: Optional[MonomialIdeal] = None
) -> QGVerdict:
    """Decide whether the extended Rees algebra is quasi-Gorenstein.

    The criterion: for some degree a in [s - d + 1, r - d + 1], with
    u = r - d + 1 - a, the equality reduction^i : ideal^r ==
    ideal^(i - u) holds for all i. Degrees i <= 0 hold by the power
    conventions, so the scan covers 1 <= i <= r + d + 2, extended to
    u + r when that is larger; a multiplicative probe one step past
    the edge certifies the pattern continues. At most one candidate
    degree can survive; two surviving would mean distinct powers of a
    proper ideal coincide, so that raises InvariantViolationError, as
    does a failed probe or a mismatch with the direct computation of
    u as the largest n with ideal^r inside reduction^n.
    """
    d = ideal.dim
    if reduction is None:
        reduction = find_pure_power_reduction(ideal)
        if reduction is None:
            raise InapplicableError(
                "no pure-power reduction to run the colon test against"
            )
    if reduction.pure_power_exponents() is None:
        raise InapplicableError(
            "the colon test needs a reduction generated by pure powers"
        )
    r = reduction_number(ideal, reduction)
    s = nilpotency_index(ideal, reduction, r)
    window = r + d + 2
    edge_max = max(window, (r - s) + r)

    j_pows = powers_upto(reduction, edge_max + 1)
    i_pows = powers_upto(ideal, window)
    i_r = i_pows[r]
    unit = MonomialIdeal.unit(d)

    def rhs(exponent: int) -> MonomialIdeal:
        if exponent <= 0:
            return unit
        return i_pows[exponent] if exponent < len(i_pows) else ideal ** exponent

    passing: List[Tuple[int, int]] = []
    for a in range(s - d + 1, r - d + 2):
        u = r - d + 1 - a
        ok = True
        for i in range(1, window + 1):
            if j_pows[i].colon(i_r) != rhs(i - u):
                ok = False
                break
        if ok:
            passing.append((a, u))

    if len(passing) > 1:
        raise InvariantViolationError(
            f"several degrees satisfy the colon pattern: "
            f"{[a for a, _ in passing]}"
        )
    if not passing:
        return QGVerdict(
            quasi_gorenstein=False,
            a=None,
            u=None,
            reduction=reduction,
            reduction_number=r,
            nilpotency_index=s,
            checked_range=(-window, window),
            probe_ok=None,
        )

    a, u = passing[0]
    edge = max(window, u + r)
    for i in range(window + 1, edge + 1):
        if j_pows[i].colon(i_r) != rhs(i - u):
            raise InvariantViolationError(
                f"colon pattern breaks between window and edge at i = {i}"
            )
    probe_lhs = j_pows[edge + 1].colon(i_r)
    probe_rhs = reduction * j_pows[edge].colon(i_r)
    probe_ok = probe_lhs == probe_rhs
    if not probe_ok:
        raise InvariantViolationError(
            f"stabilization probe failed at the window edge {edge}: "
            f"{probe_lhs.to_str()} vs {probe_rhs.to_str()}"
        )

    direct_u = 0
    while direct_u <= edge and i_r.is_subset(j_pows[direct_u + 1]):
        direct_u += 1
    if direct_u != u:
        raise InvariantViolationError(
            f"u from the colon pattern is {u} but ideal^r sits inside "
            f"reduction^{direct_u} and no further"
        )
    return QGVerdict(
        quasi_gorenstein=True,
        a=a,
        u=u,
        reduction=reduction,
        reduction_number=r,
        nilpotency_index=s,
        checked_range=(-window, edge),
        probe_ok=probe_ok,
    )


@dataclass(frozen=True)
class CMVerdict:
    """Outcome of the intersection-absorption test for the
    Cohen-Macaulay property of the extended Rees algebra."""

    cohen_macaulay: bool
    reduction: MonomialIdeal
    reduction_number: int
    first_failure: Optional[int]


def cohen_macaulay_test(
    ideal: MonomialIdeal, reduction: Optional[MonomialIdeal] = None
) -> CMVerdict:
    """Cohen-Macaulayness via the containments
    reduction ∩ ideal^i inside reduction * ideal^(i-1) for
    1 <= i <= r (they hold automatically past r)."""
    if reduction is None:
        reduction = find_pure_power_reduction(ideal)
        if reduction is None:
            raise InapplicableError(
                "no pure-power reduction to run the intersection test against"
            )
    r = reduction_number(ideal, reduction)
    i_pows = powers_upto(ideal, r)
    for i in range(1, r + 1):
        if not (reduction & i_pows[i]).is_subset(reduction * i_pows[i - 1]):
            return CMVerdict(False, reduction, r, i)
    return CMVerdict(True, reduction, r, None)


def two_standard_test(ideal: MonomialIdeal, reduction: MonomialIdeal) -> bool:
    """Equality reduction ∩ ideal^i == reduction * ideal^(i-1) for
    i = 1 and 2 (the i = 1 case is containment of the reduction)."""
    if not is_monomial_reduction(reduction, ideal):
        raise NotAReductionError(
            f"{reduction.to_str()} is not a reduction of {ideal.to_str()}"
        )
    for i in (1, 2):
        if (reduction & ideal ** i) != reduction * ideal ** (i - 1):
            return False
    return True


def core_compute(
    ideal: MonomialIdeal, reduction: MonomialIdeal, u: int
) -> MonomialIdeal:
    """The core of ideal^u (intersection of all its reductions),
    computed as the stable value of the colon ladder

        C_n = (reduction_scaled)^(n+1) : (ideal^u)^n,

    where reduction_scaled is generated by the u-th powers of the
    reduction's generators. The ladder starts at the reduction number
    of the base ideal and must repeat a value within d + 4 further
    steps; failing that raises StabilizationError.
    """
    if not isinstance(u, int) or u < 1:
        raise InapplicableError("the power u must be a positive int")
    if reduction.pure_power_exponents() is None:
        raise InapplicableError(
            "core computation needs a reduction generated by pure powers"
        )
    r = reduction_number(ideal, reduction)
    scaled = reduction.bracket_power(u)
    base = ideal ** u
    guard = r + ideal.dim + 4
    previous: Optional[MonomialIdeal] = None
    ladder: List[str] = []
    for n in range(r, guard + 1):
        current = (scaled ** (n + 1)).colon(base ** n)
        ladder.append(current.to_str())
        if previous is not None and current == previous:
            return current
        previous = current
    raise StabilizationError(
        f"core ladder did not repeat by n = {guard}: {' -> '.join(ladder)}"
    )


def core_matches_power(
    ideal: MonomialIdeal, reduction: MonomialIdeal, u: int, a: int
) -> bool:
    """Does core(ideal^u) equal ideal^(d*u + a)?"""
    return core_compute(ideal, reduction, u) == ideal ** (ideal.dim * u + a)


def conductor_exponent(
    ideal: MonomialIdeal,
    horizon: int = 8,
    facets: Optional[FacetSystem] = None,
) -> int:
    """The least c such that the closure of ideal^(n+c) lies inside
    ideal^n for every n up to the horizon. Raises StabilizationError
    when no c up to the horizon works."""
    if facets is None:
        facets = newton_polyhedron(ideal)
    i_pows = powers_upto(ideal, horizon)
    closures: Dict[int, MonomialIdeal] = {}

    def closure(n: int) -> MonomialIdeal:
        if n not in closures:
            closures[n] = closure_power(ideal, n, facets)
        return closures[n]

    for c in range(horizon + 1):
        if all(
            closure(n + c).is_subset(i_pows[n]) for n in range(1, horizon + 1)
        ):
            return c
    raise StabilizationError(
        f"no conductor exponent up to the horizon {horizon}"
    )


@dataclass(frozen=True)
class ConsistencyCheck:
    name: str
    applicable: bool
    ok: bool
    expected: Optional[int]
    actual: Optional[int]


@dataclass(frozen=True)
class ConsistencyReport:
    """Cross-checks tying the cone-side degree invariant to the
    algebra-side indices. Never raises; failed checks are recorded
    and left to the caller (the command line maps them to a distinct
    exit code)."""

    checks: Tuple[ConsistencyCheck, ...]

    @property
    def all_ok(self) -> bool:
        return all(c.ok for c in self.checks)


def a_invariant_consistency(
    ideal: MonomialIdeal,
    reduction: Optional[MonomialIdeal] = None,
    horizon: int = 8,
) -> ConsistencyReport:
    """Compare the degree invariant of the normalized algebra with its
    algebra-side characterizations:

      closure-index:     a == closure nilpotency index - d + 1
      conductor-shift:   a == quasi-Gorenstein degree + conductor
      nilpotency-degree: when s == r, quasi-Gorenstein degree ==
                         s - d + 1

    Later checks apply only when a pure-power reduction exists, or
    only when the quasi-Gorenstein test is positive; inapplicable
    checks are recorded as such and count as passing.
    """
    from .cone import is_gorenstein_normalization

    d = ideal.dim
    facets = newton_polyhedron(ideal)
    _, data = is_gorenstein_normalization(ideal, facets)
    checks: List[ConsistencyCheck] = []

    if reduction is None:
        reduction = find_pure_power_reduction(ideal, facets)
    if reduction is None:
        checks.append(ConsistencyCheck("closure-index", False, True, None, None))
        checks.append(ConsistencyCheck("conductor-shift", False, True, None, None))
        checks.append(ConsistencyCheck("nilpotency-degree", False, True, None, None))
        return ConsistencyReport(tuple(checks))

    s_bar = closure_nilpotency_index(ideal, reduction, facets)
    expected = s_bar - d + 1
    checks.append(
        ConsistencyCheck(
            "closure-index", True, data.a_invariant == expected, expected,
            data.a_invariant,
        )
    )

    try:
        verdict = quasi_gorenstein_test(ideal, reduction)
    except InapplicableError:
        verdict = None
    if verdict is not None and verdict.quasi_gorenstein:
        c = conductor_exponent(ideal, horizon, facets)
        shifted = verdict.a + c
        checks.append(
            ConsistencyCheck(
                "conductor-shift", True, data.a_invariant == shifted,
                shifted, data.a_invariant,
            )
        )
        if verdict.nilpotency_index == verdict.reduction_number:
            s_expected = verdict.nilpotency_index - d + 1
            checks.append(
                ConsistencyCheck(
                    "nilpotency-degree", True, verdict.a == s_expected,
                    s_expected, verdict.a,
                )
            )
        else:
            checks.append(
                ConsistencyCheck("nilpotency-degree", False, True, None, None)
            )
    else:
        checks.append(
            ConsistencyCheck("conductor-shift", False, True, None, None)
        )
        checks.append(
            ConsistencyCheck("nilpotency-degree", False, True, None, None)
        )
    return ConsistencyReport(tuple(checks))
