"""Strict CSV roster format: one record per line, name then one plain-decimal
rating per area, no header, no quoting.

    Arzami bin Othman,4,4,1,2,3

Parsing is total — every non-blank line either becomes a profile or aborts
with the 1-based line number of the first failure. Serialization round-trips:
parse(serialize(r)) reproduces r exactly.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from decimal import Decimal
from enum import Enum
from pathlib import Path

from .domain import (
    AreaSchema,
    DEFAULT_SCHEMA,
    MatchError,
    OutOfRange,
    Roster,
    SupervisorProfile,
    build_roster,
    validate_vector,
)

# Plain decimal only: optional sign, digits with optional fraction. No
# exponents, no inf/nan — those are data bugs, not ratings.
_PLAIN_DECIMAL = re.compile(r"^[+-]?(\d+(\.\d*)?|\.\d+)$")


class ParseErrorKind(str, Enum):
    FIELD_COUNT = "FieldCount"
    NON_NUMERIC = "NonNumeric"
    OUT_OF_RANGE = "OutOfRange"
    EMPTY_NAME = "EmptyName"
    DUPLICATE_NAME = "DuplicateName"
    EMPTY_FILE = "EmptyFile"


@dataclass
class ParseError(MatchError):
    """Parse failure pinned to the offending record line (None for EmptyFile)."""

    line_number: int | None
    kind: ParseErrorKind
    detail: str

    def __post_init__(self) -> None:
        super().__init__(str(self))

    def __str__(self) -> str:
        where = f"line {self.line_number}: " if self.line_number is not None else ""
        return f"{where}{self.kind.value}: {self.detail}"


def parse_roster(text: str, schema: AreaSchema = DEFAULT_SCHEMA) -> Roster:
    """Parse CSV text into a roster, preserving file order.

    Accepts LF and CRLF line endings; blank lines are ignored; surrounding
    whitespace of each field is trimmed. Never skips a malformed line.
    """
    n = len(schema)
    profiles: list[SupervisorProfile] = []
    seen: set[str] = set()
    for line_number, raw_line in enumerate(text.split("\n"), start=1):
        line = raw_line[:-1] if raw_line.endswith("\r") else raw_line
        if not line.strip():
            continue
        fields = [field.strip() for field in line.split(",")]
        if len(fields) != 1 + n:
            raise ParseError(
                line_number,
                ParseErrorKind.FIELD_COUNT,
                f"expected {1 + n} comma-separated fields (name + {n} ratings), got {len(fields)}",
            )
        name = fields[0]
        if not name:
            raise ParseError(line_number, ParseErrorKind.EMPTY_NAME, "record has no name")
        if name in seen:
            raise ParseError(
                line_number, ParseErrorKind.DUPLICATE_NAME, f"supervisor name {name!r} already used"
            )
        values: list[float] = []
        for position, field in enumerate(fields[1:], start=2):
            if not _PLAIN_DECIMAL.match(field):
                raise ParseError(
                    line_number,
                    ParseErrorKind.NON_NUMERIC,
                    f"field {position} ({field!r}) is not a plain decimal number",
                )
            values.append(float(field))
        try:
            vector = validate_vector(schema, values)
        except OutOfRange as exc:
            raise ParseError(line_number, ParseErrorKind.OUT_OF_RANGE, str(exc)) from None
        profiles.append(SupervisorProfile(name, vector))
        seen.add(name)
    if not profiles:
        raise ParseError(None, ParseErrorKind.EMPTY_FILE, "no records found")
    return build_roster(schema, profiles)


def format_rating(value: float) -> str:
    """Shortest faithful decimal: 5 -> "5", 4.5 -> "4.5", 1.25 -> "1.25"."""
    value = float(value)
    if value.is_integer():
        return str(int(value))
    text = repr(value)
    if "e" in text or "E" in text:
        # Expand scientific notation; Decimal keeps the shortest digits.
        text = format(Decimal(text), "f")
    return text


def serialize_roster(roster: Roster) -> str:
    """Emit the same CSV format, LF-terminated, one line per profile."""
    lines = [
        ",".join([profile.name, *(format_rating(r) for r in profile.vector)])
        for profile in roster.profiles
    ]
    return "\n".join(lines) + "\n"


def load_roster(path: str | Path, schema: AreaSchema = DEFAULT_SCHEMA) -> Roster:
    """Read and parse a roster file (UTF-8)."""
    return parse_roster(Path(path).read_text(encoding="utf-8"), schema)
