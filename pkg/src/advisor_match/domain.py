"""Core value types: area schema, rating vectors, supervisor profiles, roster.

Everything here is immutable after construction and validates its own
invariants, so instances can be shared freely across threads and requests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

RATING_MIN = 0.0
RATING_MAX = 5.0

DEFAULT_AREAS = (
    "Multimedia",
    "Web Application",
    "Network",
    "Artificial Intelligence",
    "Mobile Application",
)


class MatchError(Exception):
    """Base class for all rule violations raised by this package."""

    @property
    def code(self) -> str:
        """Machine-readable error code (stable across releases)."""
        return type(self).__name__


class LengthMismatch(MatchError):
    def __init__(self, expected: int, got: int):
        self.expected = expected
        self.got = got
        super().__init__(f"expected {expected} ratings, got {got}")


class OutOfRange(MatchError):
    def __init__(self, index: int, value: float):
        self.index = index
        self.value = value
        super().__init__(
            f"rating {index + 1} is {value!r}, outside [{RATING_MIN:g}, {RATING_MAX:g}]"
        )


class NotFinite(MatchError):
    def __init__(self, index: int):
        self.index = index
        super().__init__(f"rating {index + 1} is not a finite number")


class DuplicateName(MatchError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"duplicate supervisor name {name!r}")


class EmptyRoster(MatchError):
    def __init__(self) -> None:
        super().__init__("roster must contain at least one supervisor")


class UnknownName(MatchError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"no supervisor named {name!r}")


def _check_label(label: str, what: str) -> str:
    """Shared name/area rules: trimmed, non-empty, no commas or line breaks."""
    trimmed = label.strip()
    if not trimmed:
        raise ValueError(f"{what} must not be empty or whitespace-only")
    if "," in trimmed:
        raise ValueError(f"{what} must not contain a comma: {trimmed!r}")
    if "\n" in trimmed or "\r" in trimmed:
        raise ValueError(f"{what} must not contain line breaks: {trimmed!r}")
    return trimmed


@dataclass(frozen=True)
class AreaSchema:
    """Ordered interest-area names; defines the dimensionality of every vector."""

    areas: tuple[str, ...]

    def __post_init__(self) -> None:
        areas = tuple(_check_label(a, "area name") for a in self.areas)
        if not areas:
            raise ValueError("schema needs at least one area")
        if len(set(areas)) != len(areas):
            raise ValueError(f"area names must be distinct: {areas!r}")
        object.__setattr__(self, "areas", areas)

    def __len__(self) -> int:
        return len(self.areas)

    def __iter__(self) -> Iterator[str]:
        return iter(self.areas)


DEFAULT_SCHEMA = AreaSchema(DEFAULT_AREAS)


@dataclass(frozen=True)
class InterestVector:
    """Per-area ratings, each a finite real in [0, 5].

    Range checks reject rather than clamp: a bad rating is a caller error,
    not something to silently repair.
    """

    ratings: tuple[float, ...]

    def __post_init__(self) -> None:
        ratings = tuple(float(r) for r in self.ratings)
        if not ratings:
            raise ValueError("rating vector must not be empty")
        for i, r in enumerate(ratings):
            if not math.isfinite(r):
                raise NotFinite(i)
            if r < RATING_MIN or r > RATING_MAX:
                raise OutOfRange(i, r)
        object.__setattr__(self, "ratings", ratings)

    def __len__(self) -> int:
        return len(self.ratings)

    def __iter__(self) -> Iterator[float]:
        return iter(self.ratings)

    def __getitem__(self, index: int) -> float:
        return self.ratings[index]


@dataclass(frozen=True)
class SupervisorProfile:
    """One supervisor: a display name plus their interest vector."""

    name: str
    vector: InterestVector

    def __post_init__(self) -> None:
        object.__setattr__(self, "name", _check_label(self.name, "supervisor name"))


@dataclass(frozen=True)
class QueryProfile:
    """A student's ratings, shaped exactly like a supervisor vector."""

    vector: InterestVector

    @classmethod
    def from_ratings(cls, schema: AreaSchema, raw: Sequence[float]) -> "QueryProfile":
        return cls(validate_vector(schema, raw))


@dataclass(frozen=True)
class Roster:
    """Validated, ordered collection of profiles sharing one schema.

    Insertion order is preserved; names are pairwise distinct (case-sensitive,
    byte-wise after trimming) and every vector matches the schema length.
    """

    schema: AreaSchema
    profiles: tuple[SupervisorProfile, ...]

    def __post_init__(self) -> None:
        profiles = tuple(self.profiles)
        if not profiles:
            raise EmptyRoster()
        seen: set[str] = set()
        for p in profiles:
            if len(p.vector) != len(self.schema):
                raise LengthMismatch(len(self.schema), len(p.vector))
            if p.name in seen:
                raise DuplicateName(p.name)
            seen.add(p.name)
        object.__setattr__(self, "profiles", profiles)

    def __len__(self) -> int:
        return len(self.profiles)

    def __iter__(self) -> Iterator[SupervisorProfile]:
        return iter(self.profiles)

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.profiles)

    def get(self, name: str) -> SupervisorProfile | None:
        for p in self.profiles:
            if p.name == name:
                return p
        return None

    def require(self, name: str) -> SupervisorProfile:
        profile = self.get(name)
        if profile is None:
            raise UnknownName(name)
        return profile


def validate_vector(schema: AreaSchema, raw: Sequence[float] | InterestVector) -> InterestVector:
    """Check length against the schema, then per-rating finiteness and range.

    Idempotent: feeding a valid vector back in returns an equal vector.
    """
    values: Iterable[float] = raw.ratings if isinstance(raw, InterestVector) else raw
    values = tuple(values)
    if len(values) != len(schema):
        raise LengthMismatch(len(schema), len(values))
    return InterestVector(values)


def build_roster(schema: AreaSchema, profiles: Iterable[SupervisorProfile]) -> Roster:
    """Assemble a roster, surfacing the first invariant violation as an error."""
    return Roster(schema, tuple(profiles))
