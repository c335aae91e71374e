"""Finite universe, subset bitmasks and indexed set families.

Subsets of the universe ``X = {0, ..., n-1}`` are plain ``int`` bitmasks
(element ``i`` present iff bit ``i`` is set).  Subsets of a family, the
arguments of the hyperspace measure, are ``int`` bitmasks over family
*indices* and are called hypermasks.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import ElementOutOfRange, MissingUniverseSet, TooLarge

MAX_UNIVERSE = 24

SubsetMask = int
HyperMask = int


@dataclass(frozen=True)
class Universe:
    n: int

    def __post_init__(self):
        if not isinstance(self.n, (int, np.integer)) or isinstance(self.n, bool):
            raise TypeError(f"universe size must be an integer, got {self.n!r}")
        if self.n < 1:
            raise TooLarge(f"universe needs at least one element, got n={self.n}")
        if self.n > MAX_UNIVERSE:
            raise TooLarge(f"universe capped at n={MAX_UNIVERSE}, got n={self.n}")

    @property
    def full(self) -> SubsetMask:
        return (1 << self.n) - 1

    def check(self, mask: SubsetMask) -> SubsetMask:
        if mask < 0 or mask >> self.n:
            raise ElementOutOfRange(f"mask {mask:#x} has elements outside 0..{self.n - 1}")
        return int(mask)

    def complement(self, mask: SubsetMask) -> SubsetMask:
        return self.full ^ self.check(mask)

    def mask(self, elements: Iterable[int]) -> SubsetMask:
        """Bitmask of 0-based ``elements``."""
        bits = 0
        for e in elements:
            if not 0 <= e < self.n:
                raise ElementOutOfRange(f"element {e} outside 0..{self.n - 1}")
            bits |= 1 << e
        return bits

    def elements(self, mask: SubsetMask) -> list[int]:
        return [i for i in range(self.n) if mask >> i & 1]

    def label(self, mask: SubsetMask) -> str:
        """1-based set notation, e.g. ``{1,3}``; used in reports."""
        return "{" + ",".join(str(i + 1) for i in self.elements(mask)) + "}"


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def iter_submasks(mask: int) -> Iterator[int]:
    """All submasks of ``mask`` including 0, in decreasing order."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def hypermasks_by_size(p: int) -> list[int]:
    """Nonempty hypermasks over ``p`` indices, by size then lexicographically by index set.

    This is the row order of hand-written hyperspace tables.
    """
    rows = range(1, 1 << p)
    return sorted(rows, key=lambda h: (popcount(h), list(iter_bits(h))))


@dataclass(frozen=True)
class SetFamily:
    """A collection of distinct subsets of the universe that contains ``X``.

    Members are kept sorted ascending by mask value; a member's position in
    that order is its family index.
    """

    universe: Universe
    members: tuple[SubsetMask, ...]
    index: dict = field(compare=False, repr=False)

    @property
    def p(self) -> int:
        return len(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[SubsetMask]:
        return iter(self.members)

    def __contains__(self, mask) -> bool:
        return mask in self.index

    def index_of(self, mask: SubsetMask) -> int:
        try:
            return self.index[mask]
        except KeyError:
            raise KeyError(f"{self.universe.label(mask)} is not a family member") from None

    def member(self, i: int) -> SubsetMask:
        return self.members[i]

    @property
    def has_empty(self) -> bool:
        return 0 in self.index

    @property
    def x_index(self) -> int:
        return self.index[self.universe.full]

    @property
    def full_hyper(self) -> HyperMask:
        return (1 << self.p) - 1

    @cached_property
    def mask_array(self) -> np.ndarray:
        arr = np.array(self.members, dtype=np.int64)
        arr.flags.writeable = False
        return arr

    def hyper(self, masks: Iterable[SubsetMask]) -> HyperMask:
        """Hypermask selecting the given members."""
        bits = 0
        for m in masks:
            bits |= 1 << self.index_of(m)
        return bits

    def check_hyper(self, hyper: HyperMask) -> HyperMask:
        if hyper < 0 or hyper >> self.p:
            raise ElementOutOfRange(f"hypermask {hyper:#x} exceeds family size p={self.p}")
        return int(hyper)

    def members_of(self, hyper: HyperMask) -> list[SubsetMask]:
        return [self.members[i] for i in iter_bits(self.check_hyper(hyper))]

    def hyper_bools(self, hyper: HyperMask) -> np.ndarray:
        self.check_hyper(hyper)
        return np.array([hyper >> i & 1 for i in range(self.p)], dtype=bool)

    def label(self, hyper: HyperMask) -> str:
        return "{" + ", ".join(self.universe.label(m) for m in self.members_of(hyper)) + "}"


def make_family(universe: Universe, members: Sequence[SubsetMask]) -> SetFamily:
    if len(members) == 0:
        raise MissingUniverseSet("family must contain X")
    masks = sorted({universe.check(int(m)) for m in members})
    if universe.full not in masks:
        raise MissingUniverseSet(
            f"family must contain X={universe.label(universe.full)} "
            "(conditional aggregation needs X among the measured sets)"
        )
    return SetFamily(universe, tuple(masks), {m: i for i, m in enumerate(masks)})


def powerset_family(universe: Universe | int) -> SetFamily:
    if not isinstance(universe, Universe):
        universe = Universe(universe)
    masks = tuple(range(1 << universe.n))
    return SetFamily(universe, masks, {m: m for m in masks})


def is_closed_under_complements(family: SetFamily) -> bool:
    full = family.universe.full
    return all((full ^ m) in family.index for m in family.members)
