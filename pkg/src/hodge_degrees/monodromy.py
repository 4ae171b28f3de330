"""Monodromy data of cyclic admissible covers and their numerical invariants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import combinations_with_replacement, product
from math import gcd
from typing import Iterator, Sequence

from .boundary import BoundaryCurve

__all__ = [
    "InvalidDatumError",
    "MonodromyDatum",
    "CoverInvariants",
    "new_datum",
    "age",
    "age_sum",
    "rank_eigenbundle",
    "cover_invariants",
    "induced_datum",
    "enumerate_data",
]


class InvalidDatumError(ValueError):
    """Raised when a monodromy datum (or an index into one) is not valid."""


@dataclass(frozen=True)
class MonodromyDatum:
    """Cyclic group order ``d`` and monodromies ``m_1..m_n`` with ``0 <= m_i < d``.

    The existence condition ``sum(m) = 0 mod d`` is enforced. Connectedness
    (``gcd(m_1, ..., m_n, d) = 1``) is only reported by :meth:`is_connected`,
    because data induced on boundary curves may legitimately fail it.
    """

    d: int
    m: tuple[int, ...]

    def __post_init__(self):
        if self.d < 1:
            raise InvalidDatumError(f"d must be a positive integer, got {self.d}")
        object.__setattr__(self, "m", tuple(self.m))
        if len(self.m) < 3:
            raise InvalidDatumError(f"a monodromy datum needs n >= 3 points, got {len(self.m)}")
        bad = [x for x in self.m if not 0 <= x < self.d]
        if bad:
            raise InvalidDatumError(f"monodromies must lie in [0, {self.d}): {list(self.m)}")
        residue = sum(self.m) % self.d
        if residue:
            raise InvalidDatumError(
                f"sum of monodromies {list(self.m)} is {residue} mod {self.d}, not 0"
            )

    @property
    def n(self) -> int:
        return len(self.m)

    @property
    def dimension(self) -> int:
        return self.n - 3

    def is_connected(self) -> bool:
        return reduce(gcd, self.m, self.d) == 1

    def permuted(self, order: Sequence[int]) -> "MonodromyDatum":
        """Datum whose k-th point is the ``order[k]``-th point (1-based) of this one."""
        return MonodromyDatum(self.d, tuple(self.m[i - 1] for i in order))

    def canonical(self) -> "MonodromyDatum":
        return MonodromyDatum(self.d, tuple(sorted(self.m)))

    def __str__(self) -> str:
        return f"(d={self.d}; " + ",".join(map(str, self.m)) + ")"


@dataclass(frozen=True)
class CoverInvariants:
    genus: int
    q: tuple[int, ...]
    r: tuple[int, ...]


def new_datum(d: int, m: Sequence[int]) -> MonodromyDatum:
    """Build a datum, reducing each monodromy into ``[0, d)`` first."""
    if d < 1:
        raise InvalidDatumError(f"d must be a positive integer, got {d}")
    return MonodromyDatum(d, tuple(int(x) % d for x in m))


def _check_e(datum: MonodromyDatum, e: int) -> None:
    if not 0 <= e < datum.d:
        raise InvalidDatumError(f"character e={e} out of range [0, {datum.d})")


def age(datum: MonodromyDatum, e: int, i: int) -> Fraction:
    """Age ``<e m_i / d>`` of the character-e line bundle at point ``i`` (1-based)."""
    _check_e(datum, e)
    if not 1 <= i <= datum.n:
        raise InvalidDatumError(f"point index {i} out of range 1..{datum.n}")
    return Fraction(e * datum.m[i - 1] % datum.d, datum.d)


def age_sum(datum: MonodromyDatum, e: int) -> int:
    """Sum of the ages at all points; always an integer for a valid datum."""
    _check_e(datum, e)
    total = sum(e * x % datum.d for x in datum.m)
    if total % datum.d:
        raise AssertionError(f"non-integral age sum {total}/{datum.d} for {datum}, e={e}")
    return total // datum.d


def rank_eigenbundle(datum: MonodromyDatum, e: int) -> int:
    """Rank of the character-e summand of the Hodge bundle (orbifold Riemann-Roch).

    ``e = 0`` and vanishing ages both give rank 0 (no invariant one-forms).
    """
    s = age_sum(datum, e)
    if e == 0 or s == 0:
        return 0
    return s - 1


def cover_invariants(datum: MonodromyDatum) -> CoverInvariants:
    """Genus of the cover curve (Riemann-Hurwitz) and ramification data.

    For a disconnected datum the genus is the arithmetic genus of the
    disconnected curve and can be negative.
    """
    d = datum.d
    q = tuple(gcd(x, d) for x in datum.m)
    twice = 2 + (datum.n - 2) * d - sum(q)
    if twice % 2 or (twice < 0 and datum.is_connected()):
        raise AssertionError(f"Riemann-Hurwitz gives an impossible genus {twice}/2 for {datum}")
    return CoverInvariants(genus=twice // 2, q=q, r=tuple(d // x for x in q))


def induced_datum(datum: MonodromyDatum, curve: BoundaryCurve) -> MonodromyDatum:
    """4-pointed datum carried by a boundary curve: block sums reduced mod d."""
    if curve.n != datum.n:
        raise InvalidDatumError(f"curve on {curve.n} points does not fit datum {datum}")
    d = datum.d
    return MonodromyDatum(d, tuple(sum(datum.m[p - 1] for p in b) % d for b in curve.blocks))


def enumerate_data(
    d: int,
    n: int = 4,
    *,
    connected_only: bool = True,
    include_zero: bool = True,
    canonical: bool = True,
) -> Iterator[MonodromyDatum]:
    """All valid n-pointed data for group order ``d``, in lexicographic order.

    With ``canonical`` (the default) only nondecreasing tuples are produced,
    one per permutation orbit. Otherwise every ordered tuple is produced.
    """
    if d < 1:
        raise ValueError(f"d must be positive, got {d}")
    values = range(0 if include_zero else 1, d)
    tuples = combinations_with_replacement(values, n) if canonical else product(values, repeat=n)
    for m in tuples:
        if sum(m) % d:
            continue
        if connected_only and reduce(gcd, m, d) != 1:
            continue
        yield MonodromyDatum(d, m)
