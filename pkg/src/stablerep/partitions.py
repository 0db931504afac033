"""Partitions, Young diagrams, skew shapes and closed-form dimension formulas.

Partitions are immutable values with structural equality; trailing zeros are
normalized away at construction.  The canonical ordering used everywhere in
this package is reverse lexicographic, which is also the order in which
``enumerate_partitions`` produces its output.
"""

from __future__ import annotations

from functools import lru_cache
from math import factorial
from typing import Iterable, Iterator

from .errors import InvalidArgs


class Partition:
    """A weakly decreasing sequence of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[int] = ()):
        ps = tuple(int(x) for x in parts if int(x) != 0)
        for i in range(len(ps) - 1):
            if ps[i] < ps[i + 1]:
                raise ValueError(f"parts not weakly decreasing: {ps}")
        if ps and ps[-1] < 0:
            raise ValueError(f"negative part in {ps}")
        object.__setattr__(self, "parts", ps)

    def __setattr__(self, name, value):
        raise AttributeError("Partition is immutable")

    @property
    def weight(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __getitem__(self, i: int) -> int:
        """Row length, with implicit zeros past the last row."""
        if isinstance(i, slice):
            return self.parts[i]
        return self.parts[i] if 0 <= i < len(self.parts) else 0

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __eq__(self, other) -> bool:
        return isinstance(other, Partition) and self.parts == other.parts

    def __hash__(self) -> int:
        return hash(("Partition", self.parts))

    def __lt__(self, other: "Partition") -> bool:
        # Reverse lexicographic: (3) < (2,1) < (1,1,1).
        return self.parts > other.parts

    def __le__(self, other: "Partition") -> bool:
        return self == other or self < other

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.parts) if self.parts else "0"

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Parse the CLI/JSON syntax: comma-separated parts, "0" for empty."""
        text = text.strip()
        if text in ("0", "", "[]", "()"):
            return cls(())
        return cls(int(x) for x in text.split(","))

    def contains(self, other: "Partition") -> bool:
        """Cell-wise containment: other ⊆ self."""
        return all(other[i] <= self[i] for i in range(len(other)))

    def cells(self) -> list[tuple[int, int]]:
        """All (row, col) cells of the Young diagram, 0-indexed."""
        return [(i, j) for i, r in enumerate(self.parts) for j in range(r)]

    def remove_cell(self, row: int) -> "Partition":
        """Partition with one box removed from the given row."""
        ps = list(self.parts)
        ps[row] -= 1
        return Partition(ps)


def transpose(lam: Partition) -> Partition:
    """Transpose of the Young diagram: column lengths become row lengths."""
    if not lam.parts:
        return Partition(())
    return Partition(
        sum(1 for p in lam.parts if p >= j + 1) for j in range(lam.parts[0])
    )


class SkewShape:
    """A skew Young diagram outer/inner with inner ⊆ outer."""

    __slots__ = ("outer", "inner")

    def __init__(self, outer: Partition, inner: Partition):
        if not outer.contains(inner):
            raise ValueError(f"inner {inner} not contained in outer {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    def __setattr__(self, name, value):
        raise AttributeError("SkewShape is immutable")

    @property
    def size(self) -> int:
        return self.outer.weight - self.inner.weight

    def cells(self) -> list[tuple[int, int]]:
        return [
            (i, j)
            for i in range(len(self.outer))
            for j in range(self.inner[i], self.outer[i])
        ]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SkewShape)
            and self.outer == other.outer
            and self.inner == other.inner
        )

    def __hash__(self) -> int:
        return hash(("SkewShape", self.outer, self.inner))

    def __repr__(self) -> str:
        return f"SkewShape({self.outer!r}, {self.inner!r})"

    def __str__(self) -> str:
        return f"{self.outer}/{self.inner}"


@lru_cache(maxsize=None)
def _partitions_rec(n: int, maxpart: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out = []
    for first in range(min(n, maxpart), 0, -1):
        for rest in _partitions_rec(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of weight n in reverse lexicographic order."""
    if n < 0:
        raise InvalidArgs(f"n must be non-negative, got {n}")
    return [Partition(ps) for ps in _partitions_rec(n, n if n else 1)]


def hook_lengths(lam: Partition) -> dict[tuple[int, int], int]:
    """Hook length of every cell of the diagram."""
    t = transpose(lam)
    return {
        (i, j): (lam[i] - j) + (t[j] - i) - 1
        for (i, j) in lam.cells()
    }


def specht_dimension(lam: Partition) -> int:
    """Dimension of the irreducible symmetric-group representation indexed
    by lam, i.e. the number of standard Young tableaux of that shape
    (hook-length formula)."""
    num = factorial(lam.weight)
    for h in hook_lengths(lam).values():
        num //= h
    return num


def schur_gl_dimension(lam: Partition, d: int) -> int:
    """dim S_lam(Q^d) by the hook-content formula; zero exactly when the
    diagram has more rows than d."""
    if d < 1:
        raise InvalidArgs(f"d must be positive, got {d}")
    if lam.length > d:
        return 0
    num = 1
    den = 1
    for (i, j), h in hook_lengths(lam).items():
        num *= d + j - i
        den *= h
    assert num % den == 0
    return num // den


def arm_sorted_contents(lam: Partition, d: int) -> list[int]:
    """Contents d + j - i of the cells, sorted; used in a few sanity checks."""
    return sorted(d + j - i for (i, j) in lam.cells())
