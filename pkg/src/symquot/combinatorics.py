"""Conjugacy-class data for the symmetric group S_d.

Conjugacy classes of S_d are indexed by integer partitions of d (cycle
types). Everything is exact: class sizes are Python big integers and the
partition stream has a fixed reverse-lexicographic order so that tables
and golden files are byte-stable. All values are immutable and all
functions pure, so concurrent use needs no coordination.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial, lcm, prod
from typing import Iterator


@dataclass(frozen=True)
class CycleType:
    """Cycle type of a permutation: parts in non-increasing order.

    Fixed points are kept as explicit parts of size 1, so ``sum(parts)``
    is always the full degree d and the acting space keeps dimension d.
    """

    parts: tuple[int, ...]

    def __post_init__(self):
        if not self.parts:
            raise ValueError("cycle type needs at least one part")
        if any(p < 1 for p in self.parts):
            raise ValueError(f"cycle lengths must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be non-increasing: {self.parts}")

    @property
    def d(self) -> int:
        return sum(self.parts)

    @property
    def num_parts(self) -> int:
        return len(self.parts)

    def is_identity(self) -> bool:
        return self.parts[0] == 1

    def __str__(self) -> str:
        return "(" + ",".join(str(p) for p in self.parts) + ")"


@dataclass(frozen=True)
class ClassInfo:
    """A conjugacy class: its cycle type, exact size, and element order."""

    cycle_type: CycleType
    size: int
    order: int


def partitions(d: int) -> Iterator[CycleType]:
    """Yield every partition of d exactly once, reverse-lexicographically.

    The stream starts at (d) and ends at (1, ..., 1); its length is the
    partition number p(d).
    """
    if d < 1:
        raise ValueError(f"degree must be a positive integer, got {d}")
    current = [d]
    while True:
        yield CycleType(tuple(current))
        # rightmost part that can still shrink
        k = len(current) - 1
        while k >= 0 and current[k] == 1:
            k -= 1
        if k < 0:
            return
        # shrink it by one and refill the freed amount greedily
        freed = len(current) - k
        current[k] -= 1
        cap = current[k]
        del current[k + 1:]
        while freed > 0:
            nxt = min(cap, freed)
            current.append(nxt)
            freed -= nxt


def class_size(t: CycleType) -> int:
    """Number of permutations in S_d with cycle type ``t``.

    Centralizer formula: d! / prod(i^{m_i} m_i!) over part multiplicities.
    """
    counts = Counter(t.parts)
    centralizer = prod(i**m * factorial(m) for i, m in counts.items())
    return factorial(t.d) // centralizer


def element_order(t: CycleType) -> int:
    """Order of any permutation with cycle type ``t``: lcm of the parts."""
    return lcm(*t.parts)


def perm_sign(t: CycleType) -> int:
    """Sign of any permutation with cycle type ``t``: (-1)^(d - #parts)."""
    return -1 if (t.d - t.num_parts) % 2 else 1


def conjugacy_classes(d: int) -> list[ClassInfo]:
    """All classes of S_d in canonical partition order."""
    return [ClassInfo(t, class_size(t), element_order(t)) for t in partitions(d)]
