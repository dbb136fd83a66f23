"""Ground sets and subsets encoded as bitmasks.

Bit ``i`` of a mask stands for ``points[i]``. Everything downstream works on
plain ``int`` masks; labels only appear when reading or writing JSON.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_POINTS = 16


class SizeExceeded(ValueError):
    """A structure would exceed the supported size bounds."""


@dataclass(frozen=True)
class GroundSet:
    points: tuple[str, ...]

    def __post_init__(self) -> None:
        pts = tuple(str(p) for p in self.points)
        object.__setattr__(self, "points", pts)
        if not pts:
            raise ValueError("ground set must contain at least one point")
        if len(pts) > MAX_POINTS:
            raise SizeExceeded(f"ground set has {len(pts)} points, limit is {MAX_POINTS}")
        if len(set(pts)) != len(pts):
            raise ValueError(f"duplicate point labels in {list(pts)}")

    @classmethod
    def of_size(cls, n: int) -> "GroundSet":
        """Default labels a, b, c, ... (p0, p1, ... past 26 points)."""
        if n < 1:
            raise ValueError("ground set must contain at least one point")
        if n > MAX_POINTS:
            raise SizeExceeded(f"{n} points requested, limit is {MAX_POINTS}")
        if n <= 26:
            return cls(tuple(chr(ord("a") + i) for i in range(n)))
        return cls(tuple(f"p{i}" for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.points)

    @property
    def full(self) -> int:
        return (1 << len(self.points)) - 1

    def index(self, label: str) -> int:
        try:
            return self.points.index(label)
        except ValueError:
            raise ValueError(f"unknown point {label!r}; points are {list(self.points)}") from None

    def mask(self, labels: Iterable[str]) -> int:
        m = 0
        for lab in labels:
            m |= 1 << self.index(lab)
        return m

    def labels(self, mask: int) -> list[str]:
        """Labels of ``mask`` sorted by label, the JSON order."""
        return sorted(self.points[i] for i in members(mask))

    def subset(self, mask: int) -> "Subset":
        return Subset(self, mask)


@dataclass(frozen=True)
class Subset:
    ground: GroundSet
    bits: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits & ~self.ground.full:
            raise ValueError(f"mask {self.bits:#x} has bits outside the {self.ground.n}-point ground set")

    def __contains__(self, label: str) -> bool:
        return bool(self.bits >> self.ground.index(label) & 1)

    def __len__(self) -> int:
        return popcount(self.bits)

    def to_json(self) -> list[str]:
        return self.ground.labels(self.bits)

    def __str__(self) -> str:
        return "{" + ",".join(self.to_json()) + "}"


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def members(mask: int) -> Iterator[int]:
    """Indices of set bits, ascending."""
    i = 0
    while mask:
        if mask & 1:
            yield i
        mask >>= 1
        i += 1


def singletons(n: int) -> list[int]:
    return [1 << i for i in range(n)]


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def complement(mask: int, full: int) -> int:
    return full & ~mask


def union_all(family: Iterable[int]) -> int:
    out = 0
    for m in family:
        out |= m
    return out


def intersect_all(family: Iterable[int], full: int) -> int:
    """AND over the family; the empty family gives the whole ground set."""
    out = full
    for m in family:
        out &= m
    return out


def enumerate_subsets(g: GroundSet | int) -> range:
    n = g if isinstance(g, int) else g.n
    if n > MAX_POINTS:
        raise SizeExceeded(f"{n} points, limit is {MAX_POINTS}")
    return range(1 << n)


def fmt(mask: int, points: Sequence[str] | None = None) -> str:
    """Compact debug rendering, e.g. ``{a,c}``."""
    if points is None:
        points = [chr(ord("a") + i) if i < 26 else f"p{i}" for i in range(max(mask.bit_length(), 1))]
    return "{" + ",".join(sorted(points[i] for i in members(mask))) + "}"
