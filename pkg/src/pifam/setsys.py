"""Sample spaces, events, exact probabilities, and pairwise independence.

An event over the sample space {1..n} is stored as a fixed-width integer
bitmask: bit i-1 stands for sample point i (1-indexed outside, 0-indexed
bits inside).  All predicates run in exact integer arithmetic; the
independence test uses the cross-multiplied form n*|A & B| == |A|*|B| so
no rational numbers appear on search hot paths.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Any, Iterable, Iterator


class PifamError(Exception):
    """Base class for toolkit errors."""


class ParameterError(PifamError, ValueError):
    """An argument violates a documented precondition."""


class CapacityError(PifamError):
    """The request exceeds a hard size limit of the toolkit."""


MAX_POINTS = 63  # an event must fit one machine-width bitmask


def points_to_mask(points: Iterable[int], n: int) -> int:
    """Bitmask of a collection of 1-indexed sample points."""
    mask = 0
    for p in points:
        if not isinstance(p, int) or isinstance(p, bool):
            raise ParameterError(f"sample point {p!r} is not an integer")
        if not 1 <= p <= n:
            raise ParameterError(f"sample point {p} outside 1..{n}")
        mask |= 1 << (p - 1)
    return mask


def mask_to_points(mask: int) -> tuple[int, ...]:
    """Ascending 1-indexed sample points of a bitmask."""
    points = []
    while mask:
        low = mask & -mask
        points.append(low.bit_length())
        mask ^= low
    return tuple(points)


@dataclass(frozen=True)
class SampleSpace:
    """Uniform finite sample space on the points {1..n}, 1 <= n <= 63."""

    n: int

    def __post_init__(self) -> None:
        if not isinstance(self.n, int) or isinstance(self.n, bool):
            raise ParameterError(f"sample space size must be an integer, got {self.n!r}")
        if self.n < 1:
            raise ParameterError(f"sample space needs at least one point, got n={self.n}")
        if self.n > MAX_POINTS:
            raise CapacityError(f"n={self.n} exceeds the {MAX_POINTS}-point bitmask limit")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def event(self, points: Iterable[int]) -> Event:
        return Event(self, points_to_mask(points, self.n))

    def event_from_mask(self, mask: int) -> Event:
        return Event(self, mask)

    def omega(self) -> Event:
        return Event(self, self.full_mask)

    def empty(self) -> Event:
        return Event(self, 0)


@dataclass(frozen=True)
class Event:
    """A subset of a sample space, stored as a bitmask."""

    space: SampleSpace
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask > self.space.full_mask:
            raise ParameterError(
                f"mask {self.mask:#x} has bits outside points 1..{self.space.n}"
            )

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    @property
    def is_empty(self) -> bool:
        return self.mask == 0

    @property
    def is_full(self) -> bool:
        return self.mask == self.space.full_mask

    def points(self) -> tuple[int, ...]:
        return mask_to_points(self.mask)

    def intersection(self, other: Event) -> Event:
        _require_same_space(self, other)
        return Event(self.space, self.mask & other.mask)

    __and__ = intersection

    def complement(self) -> Event:
        return Event(self.space, self.space.full_mask ^ self.mask)

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.points())) + "}"


def _require_same_space(a: Event, b: Event) -> None:
    if a.space != b.space:
        raise ValueError(
            f"events live on different sample spaces (n={a.space.n} vs n={b.space.n})"
        )


def probability(a: Event) -> Fraction:
    """P(A) = |A|/n as an exact reduced rational."""
    return Fraction(a.size, a.space.n)


def is_independent(a: Event, b: Event) -> bool:
    """Exact test of n*|A intersect B| == |A|*|B|; no division performed."""
    _require_same_space(a, b)
    return a.space.n * (a.mask & b.mask).bit_count() == a.size * b.size


@dataclass(frozen=True, eq=False)
class Family:
    """Ordered collection of distinct events over one sample space.

    Insertion order is preserved for deterministic output; equality and
    hashing treat a family as a set of events.
    """

    space: SampleSpace
    events: tuple[Event, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "events", tuple(self.events))
        seen: set[int] = set()
        for ev in self.events:
            if ev.space != self.space:
                raise ValueError("all events of a family must share its sample space")
            if ev.mask in seen:
                raise ParameterError(f"duplicate event {ev}")
            seen.add(ev.mask)

    def __len__(self) -> int:
        return len(self.events)

    def __iter__(self) -> Iterator[Event]:
        return iter(self.events)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Family):
            return NotImplemented
        return self.space == other.space and set(self.masks()) == set(other.masks())

    def __hash__(self) -> int:
        return hash((self.space, frozenset(self.masks())))

    def masks(self) -> tuple[int, ...]:
        return tuple(ev.mask for ev in self.events)

    @classmethod
    def from_points(cls, n: int, point_lists: Iterable[Iterable[int]]) -> Family:
        space = SampleSpace(n)
        return cls(space, tuple(space.event(points) for points in point_lists))

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> Family:
        space = SampleSpace(n)
        return cls(space, tuple(space.event_from_mask(m) for m in masks))


def is_pairwise_independent(family: Iterable[Event]) -> bool:
    """True when every unordered pair of distinct events is independent."""
    return all(is_independent(a, b) for a, b in itertools.combinations(family, 2))


def is_valid_g_family(family: Family) -> bool:
    """Nonempty, distinct, pairwise independent: the object g(n) counts.

    Such a family is automatically intersecting, because nonempty
    independent events satisfy |A intersect B| = |A||B|/n > 0.
    """
    return all(not ev.is_empty for ev in family) and is_pairwise_independent(family)


def family_to_dict(family: Family) -> dict[str, Any]:
    """JSON form: {"n": int, "events": [[sorted 1-indexed points], ...]}."""
    return {"n": family.space.n, "events": [list(ev.points()) for ev in family]}


def family_from_dict(data: Any) -> Family:
    if not isinstance(data, dict):
        raise ParameterError("family JSON must be an object")
    missing = {"n", "events"} - data.keys()
    if missing:
        raise ParameterError(f"family JSON is missing keys: {sorted(missing)}")
    n = data["n"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ParameterError('family JSON field "n" must be an integer')
    raw_events = data["events"]
    if not isinstance(raw_events, list):
        raise ParameterError('family JSON field "events" must be a list of point lists')
    space = SampleSpace(n)
    events = []
    for item in raw_events:
        if not isinstance(item, list):
            raise ParameterError(f"event {item!r} is not a list of points")
        mask = points_to_mask(item, n)
        if mask.bit_count() != len(item):
            raise ParameterError(f"event {item!r} repeats a sample point")
        events.append(space.event_from_mask(mask))
    return Family(space, tuple(events))
