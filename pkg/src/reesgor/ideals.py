"""Monomial ideals as canonical antichains of exponent vectors.

An ideal in d variables is stored by its unique minimal monomial
generating set: the componentwise-minimal exponent vectors, with
duplicates removed, sorted lexicographically. Because the stored form
is canonical, dataclass equality is semantic equality of ideals. The
zero ideal has an empty generator tuple; the unit ideal is generated by
the zero vector.

All exponents are Python ints, so arithmetic never overflows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Optional, Sequence, Tuple

from .errors import DimensionMismatchError, InvalidIdealError

Vector = Tuple[int, ...]


def leq(u: Sequence[int], v: Sequence[int]) -> bool:
    """Componentwise u <= v, i.e. the monomial x^u divides x^v."""
    return all(a <= b for a, b in zip(u, v))


def minimalize(vectors: Iterable[Sequence[int]], dim: int) -> Tuple[Vector, ...]:
    """Reduce a generating set to the componentwise-minimal antichain.

    Deduplicates, drops every vector dominated by another, and returns
    the survivors sorted lexicographically. Raises InvalidIdealError on
    malformed input (wrong arity, negative or non-integer entries).
    """
    unique = set()
    for raw in vectors:
        v = tuple(raw)
        if len(v) != dim:
            raise InvalidIdealError(
                f"generator {v} has {len(v)} entries, expected {dim}"
            )
        for entry in v:
            if not isinstance(entry, int):
                raise InvalidIdealError(f"non-integer exponent in {v}")
            if entry < 0:
                raise InvalidIdealError(f"negative exponent in {v}")
        unique.add(v)
    # Any strict dominator has strictly smaller coordinate sum, so after
    # sorting by sum each vector only needs to be checked against the
    # survivors collected so far.
    kept: list[Vector] = []
    for v in sorted(unique, key=lambda w: (sum(w), w)):
        if not any(leq(u, v) for u in kept):
            kept.append(v)
    return tuple(sorted(kept))


@dataclass(frozen=True)
class MonomialIdeal:
    """A monomial ideal, canonicalized on construction."""

    dim: int
    gens: Tuple[Vector, ...]

    def __post_init__(self) -> None:
        if not isinstance(self.dim, int) or self.dim < 1:
            raise InvalidIdealError("ambient dimension must be a positive int")
        object.__setattr__(self, "gens", minimalize(self.gens, self.dim))

    # ---------------------------------------------------------------- #
    # constructors

    @classmethod
    def zero(cls, dim: int) -> "MonomialIdeal":
        return cls(dim, ())

    @classmethod
    def unit(cls, dim: int) -> "MonomialIdeal":
        return cls(dim, ((0,) * dim,))

    @classmethod
    def maximal(cls, dim: int) -> "MonomialIdeal":
        """The irrelevant maximal ideal (x_1, ..., x_d)."""
        gens = []
        for i in range(dim):
            e = [0] * dim
            e[i] = 1
            gens.append(tuple(e))
        return cls(dim, tuple(gens))

    @classmethod
    def pure_powers(cls, exponents: Sequence[int]) -> "MonomialIdeal":
        """The ideal (x_1^{a_1}, ..., x_d^{a_d}) with every a_i >= 1."""
        exps = tuple(exponents)
        if not exps or any((not isinstance(a, int)) or a < 1 for a in exps):
            raise InvalidIdealError(
                f"pure power exponents must be positive ints, got {exps}"
            )
        dim = len(exps)
        gens = []
        for i, a in enumerate(exps):
            e = [0] * dim
            e[i] = a
            gens.append(tuple(e))
        return cls(dim, tuple(gens))

    # ---------------------------------------------------------------- #
    # predicates

    def is_zero(self) -> bool:
        return not self.gens

    def is_unit(self) -> bool:
        return self.gens == ((0,) * self.dim,)

    def is_m_primary(self) -> bool:
        """True iff the ideal is proper and contains a pure power of
        every variable, i.e. its radical is the maximal ideal."""
        if self.is_zero() or self.is_unit():
            return False
        covered = set()
        for g in self.gens:
            support = [i for i, e in enumerate(g) if e > 0]
            if len(support) == 1:
                covered.add(support[0])
        return len(covered) == self.dim

    def pure_power_exponents(self) -> Optional[Tuple[int, ...]]:
        """If the ideal is exactly (x_1^{a_1}, ..., x_d^{a_d}), return
        (a_1, ..., a_d); otherwise None."""
        if len(self.gens) != self.dim:
            return None
        exps = [0] * self.dim
        for g in self.gens:
            support = [i for i, e in enumerate(g) if e > 0]
            if len(support) != 1:
                return None
            exps[support[0]] = g[support[0]]
        if 0 in exps:
            return None
        return tuple(exps)

    def contains(self, vector: Sequence[int]) -> bool:
        """Membership of the monomial x^vector."""
        v = tuple(vector)
        if len(v) != self.dim:
            raise DimensionMismatchError(
                f"vector of length {len(v)} against dimension {self.dim}"
            )
        return any(leq(g, v) for g in self.gens)

    def is_subset(self, other: "MonomialIdeal") -> bool:
        self._require_same_dim(other)
        return all(other.contains(g) for g in self.gens)

    def __le__(self, other: "MonomialIdeal") -> bool:
        return self.is_subset(other)

    # ---------------------------------------------------------------- #
    # arithmetic

    def _require_same_dim(self, other: "MonomialIdeal") -> None:
        if not isinstance(other, MonomialIdeal):
            raise TypeError(f"expected MonomialIdeal, got {type(other).__name__}")
        if self.dim != other.dim:
            raise DimensionMismatchError(
                f"dimension {self.dim} vs {other.dim}"
            )

    def __add__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._require_same_dim(other)
        return MonomialIdeal(self.dim, self.gens + other.gens)

    def __mul__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        self._require_same_dim(other)
        products = {
            tuple(a + b for a, b in zip(g, h))
            for g in self.gens
            for h in other.gens
        }
        return MonomialIdeal(self.dim, tuple(products))

    def __pow__(self, n: int) -> "MonomialIdeal":
        """I^n by repeated squaring. Exponents n <= 0 give the unit
        ideal (the convention used throughout the filtration code)."""
        if not isinstance(n, int):
            raise TypeError("exponent must be an int")
        if n <= 0:
            return MonomialIdeal.unit(self.dim)
        result = MonomialIdeal.unit(self.dim)
        base = self
        e = n
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __and__(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """Intersection: generated by pairwise componentwise maxima."""
        self._require_same_dim(other)
        joins = {
            tuple(max(a, b) for a, b in zip(g, h))
            for g in self.gens
            for h in other.gens
        }
        return MonomialIdeal(self.dim, tuple(joins))

    def colon(self, other: "MonomialIdeal") -> "MonomialIdeal":
        """The colon ideal (self : other).

        For a single monomial divisor x^g the quotient is generated by
        the clamped differences max(h - g, 0); for several it is the
        intersection of the single-divisor quotients.
        """
        self._require_same_dim(other)
        if other.is_zero():
            return MonomialIdeal.unit(self.dim)
        result: Optional[MonomialIdeal] = None
        for g in other.gens:
            shifted = tuple(
                tuple(max(h_i - g_i, 0) for h_i, g_i in zip(h, g))
                for h in self.gens
            )
            piece = MonomialIdeal(self.dim, shifted)
            result = piece if result is None else (result & piece)
        assert result is not None
        return result

    def bracket_power(self, u: int) -> "MonomialIdeal":
        """The ideal generated by the u-th powers of the generators
        (for monomial generators: each exponent vector scaled by u)."""
        if not isinstance(u, int) or u < 1:
            raise InvalidIdealError("bracket power requires a positive int")
        return MonomialIdeal(
            self.dim, tuple(tuple(u * e for e in g) for g in self.gens)
        )

    # ---------------------------------------------------------------- #
    # inspection

    def max_exponents(self) -> Vector:
        """Componentwise maximum over the generators (zeros if none).
        Handy as a bounding box for staircase enumerations."""
        if not self.gens:
            return (0,) * self.dim
        return tuple(max(g[i] for g in self.gens) for i in range(self.dim))

    def to_str(self) -> str:
        """Human-readable rendering such as '(x^3, x*y, y^3)'."""
        if self.is_zero():
            return "(0)"
        names = variable_names(self.dim)
        terms = []
        for g in reversed(self.gens):
            parts = []
            for name, e in zip(names, g):
                if e == 1:
                    parts.append(name)
                elif e > 1:
                    parts.append(f"{name}^{e}")
            terms.append("*".join(parts) if parts else "1")
        return "(" + ", ".join(terms) + ")"


def variable_names(dim: int) -> Tuple[str, ...]:
    if dim <= 4:
        return tuple("xyzw"[:dim])
    return tuple(f"x{i + 1}" for i in range(dim))
