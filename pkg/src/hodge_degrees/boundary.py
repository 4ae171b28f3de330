"""Boundary curves: partitions of the marked points into four blocks."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

__all__ = ["BoundaryCurve", "enumerate_boundary_curves", "stirling2"]


@dataclass(frozen=True, eq=False)
class BoundaryCurve:
    """One-dimensional boundary stratum ``C_(X,Y,Z,W)`` of an n-pointed space.

    Points are labelled ``1..n``. Blocks keep the order they were given in
    (that order is the labelling used by :func:`induced_datum`), but equality
    and hashing only see the unordered partition.
    """

    blocks: tuple[tuple[int, ...], ...]

    def __init__(self, blocks: Iterable[Iterable[int]]):
        normalized = tuple(tuple(sorted(set(b))) for b in blocks)
        if len(normalized) != 4:
            raise ValueError(f"a boundary curve has exactly 4 blocks, got {len(normalized)}")
        if any(not b for b in normalized):
            raise ValueError("boundary curve blocks must be nonempty")
        points = [p for b in normalized for p in b]
        n = len(points)
        if len(set(points)) != n:
            raise ValueError(f"boundary curve blocks overlap: {normalized}")
        if sorted(points) != list(range(1, n + 1)):
            raise ValueError(f"boundary curve blocks must cover 1..{n}: {normalized}")
        object.__setattr__(self, "blocks", normalized)

    def _key(self) -> frozenset:
        return frozenset(self.blocks)

    def __eq__(self, other) -> bool:
        if not isinstance(other, BoundaryCurve):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def block_index(self, point: int) -> int:
        for k, b in enumerate(self.blocks):
            if point in b:
                return k
        raise ValueError(f"point {point} is not on this curve")

    def relabel(self, perm: dict[int, int]) -> "BoundaryCurve":
        return BoundaryCurve([[perm[p] for p in b] for b in self.blocks])

    def __str__(self) -> str:
        return "(" + ",".join("{" + ",".join(map(str, b)) + "}" for b in self.blocks) + ")"


def enumerate_boundary_curves(n: int) -> Iterator[BoundaryCurve]:
    """Every partition of ``{1..n}`` into 4 nonempty blocks, each exactly once.

    Walks restricted growth strings: point ``k`` goes into an existing block or
    opens the next one, and a branch is pruned once too few points remain to
    open the missing blocks.
    """
    if n < 4:
        raise ValueError(f"boundary curves need n >= 4, got {n}")
    labels = [0] * n

    def walk(k: int, used: int) -> Iterator[BoundaryCurve]:
        if k == n:
            if used == 4:
                blocks: list[list[int]] = [[] for _ in range(4)]
                for point, lab in enumerate(labels, start=1):
                    blocks[lab].append(point)
                yield BoundaryCurve(blocks)
            return
        if 4 - used > n - k:
            return
        for lab in range(min(used + 1, 4)):
            labels[k] = lab
            yield from walk(k + 1, max(used, lab + 1))

    yield from walk(0, 0)


def stirling2(n: int, k: int) -> int:
    """Stirling number of the second kind via the standard recurrence."""
    row = [1] + [0] * k
    for i in range(1, n + 1):
        for j in range(min(i, k), 0, -1):
            row[j] = j * row[j] + row[j - 1]
        row[0] = 0
    return row[k]
