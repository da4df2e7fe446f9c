"""Domain types shared by the parser, the rewrite pipeline and the CLI.

All types are immutable values: safe to share between threads, never
mutated after construction. Constructors raise :class:`ModelError` when a
field violates an invariant, carrying the full violation list.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from types import MappingProxyType
from typing import Mapping


class ModelError(ValueError):
    """A domain value failed one or more invariants."""

    def __init__(self, violations: list[str]):
        super().__init__("; ".join(violations))
        self.violations = list(violations)


class LineEnding(Enum):
    """Physical line terminator of a source or output file."""

    LF = "\n"
    CRLF = "\r\n"

    @classmethod
    def from_name(cls, name: str) -> "LineEnding":
        try:
            return cls[name.upper()]
        except KeyError:
            raise ModelError([f"unknown line ending {name!r} (expected 'lf' or 'crlf')"])


# ---------------------------------------------------------------------------
# Timecodes and timestamps
# ---------------------------------------------------------------------------

SEPARATOR_STYLES = ("colon", "semicolon")


def timecode_violations(hours: int, minutes: int, seconds: int, frames: int) -> list[str]:
    """Invariant violations for raw timecode fields, empty when valid."""
    violations = []
    if hours < 0:
        violations.append(f"hours out of range ({hours})")
    if not 0 <= minutes <= 59:
        violations.append(f"minutes out of range ({minutes})")
    if not 0 <= seconds <= 59:
        violations.append(f"seconds out of range ({seconds})")
    # Two digits in the source format; a frame rate is deliberately not
    # assumed here (verbatim mode never interprets frames).
    if not 0 <= frames <= 99:
        violations.append(f"frames out of range ({frames})")
    return violations


@dataclass(frozen=True)
class Timecode:
    """Frame-based clock value HH:MM:SS:FF as emitted by the editing software."""

    hours: int
    minutes: int
    seconds: int
    frames: int
    separator_style: str = "colon"  # "colon" | "semicolon"

    def __post_init__(self):
        violations = timecode_violations(self.hours, self.minutes, self.seconds, self.frames)
        if self.separator_style not in SEPARATOR_STYLES:
            violations.append(f"unknown separator style {self.separator_style!r}")
        if violations:
            raise ModelError(violations)

    def sort_key(self) -> tuple[int, int, int, int]:
        return (self.hours, self.minutes, self.seconds, self.frames)

    def __str__(self) -> str:
        sep = ":" if self.separator_style == "colon" else ";"
        return sep.join(f"{v:02d}" for v in (self.hours, self.minutes, self.seconds, self.frames))


def validate_timecode(t: Timecode, fps: Fraction | int | None = None) -> list[str]:
    """Re-check a timecode's invariants; with ``fps``, also require frames < fps.

    Returns the (possibly empty) violation list instead of raising:
    violations are data here, not failures.
    """
    violations = timecode_violations(t.hours, t.minutes, t.seconds, t.frames)
    if fps is not None and t.frames >= fps:
        violations.append(f"frame index {t.frames} exceeds frame rate {fps}")
    return violations


@dataclass(frozen=True)
class BracketTimestamp:
    """The ``[HH:MM:SS.XX]`` paragraph prefix that analysis software aligns with audio.

    The two digits after the dot are kept as text: verbatim conversion
    reuses the frame digits unchanged, fps-aware conversion writes
    centiseconds. Interpretation is the converter's business, not this
    type's.
    """

    hours: int
    minutes: int
    seconds: int
    fraction_digits: str  # exactly two decimal digits, e.g. "16" or "64"

    def __post_init__(self):
        violations = timecode_violations(self.hours, self.minutes, self.seconds, 0)
        if not re.fullmatch(r"\d{2}", self.fraction_digits):
            violations.append(f"fraction digits must be exactly two digits, got {self.fraction_digits!r}")
        if violations:
            raise ModelError(violations)

    def render(self) -> str:
        return f"[{self.hours:02d}:{self.minutes:02d}:{self.seconds:02d}.{self.fraction_digits}]"


# ---------------------------------------------------------------------------
# Segments and transcripts
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Segment:
    """One speech unit: start/end timecodes, optional speaker label, text."""

    start: Timecode
    end: Timecode | None = None
    speaker: str | None = None
    text: str = ""
    source_line: int = 0  # 1-based line of the block in the source, 0 if synthetic

    def __post_init__(self):
        if not self.text.strip():
            raise ModelError(["segment text must be non-empty"])
        # end < start is a parser lint (warning), deliberately not enforced here.


@dataclass(frozen=True, eq=False)
class Transcript:
    """Ordered segments plus source metadata.

    Equality is structural: two transcripts are equal iff their segments
    are equal, independent of ``source_name`` and ``line_ending``.
    """

    segments: tuple[Segment, ...] = ()
    source_name: str = ""
    line_ending: LineEnding = LineEnding.LF

    def __post_init__(self):
        object.__setattr__(self, "segments", tuple(self.segments))

    @property
    def speakers(self) -> tuple[str, ...]:
        """Distinct speaker labels in first-appearance order."""
        seen: dict[str, None] = {}
        for seg in self.segments:
            if seg.speaker is not None:
                seen.setdefault(seg.speaker, None)
        return tuple(seen)

    def __eq__(self, other):
        if not isinstance(other, Transcript):
            return NotImplemented
        return self.segments == other.segments

    def __hash__(self):
        return hash(self.segments)

    def __len__(self):
        return len(self.segments)


# ---------------------------------------------------------------------------
# Speaker maps
# ---------------------------------------------------------------------------

ACTION_KINDS = ("keep", "rename", "remove")


@dataclass(frozen=True)
class SpeakerAction:
    """Per-label decision: keep it, rename it (pseudonymize), or remove it."""

    kind: str  # "keep" | "rename" | "remove"
    name: str | None = None  # rename target, required iff kind == "rename"

    def __post_init__(self):
        violations = []
        if self.kind not in ACTION_KINDS:
            violations.append(f"unknown speaker action {self.kind!r}")
        if self.kind == "rename" and not self.name:
            violations.append("rename requires a non-empty name")
        if self.kind != "rename" and self.name is not None:
            violations.append(f"action {self.kind!r} takes no name")
        if violations:
            raise ModelError(violations)


KEEP = SpeakerAction("keep")
REMOVE = SpeakerAction("remove")


def rename(name: str) -> SpeakerAction:
    return SpeakerAction("rename", name)


@dataclass(frozen=True)
class SpeakerMap:
    """Mapping from original speaker label to its action.

    Labels absent from the map default to keep. Rename targets need not be
    distinct: merging two detected speakers into one person is allowed.
    """

    entries: Mapping[str, SpeakerAction] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "entries", MappingProxyType(dict(self.entries)))

    def action_for(self, label: str) -> SpeakerAction:
        return self.entries.get(label, KEEP)

    @classmethod
    def keep_all(cls, labels) -> "SpeakerMap":
        return cls({label: KEEP for label in labels})

    @classmethod
    def drop_all(cls, labels) -> "SpeakerMap":
        return cls({label: REMOVE for label in labels})

    # JSON wire format: {"Speaker 1": {"action": "rename", "name": "Bonnie"}, ...}
    # "name" is required iff action is "rename".

    @classmethod
    def from_json(cls, text: str) -> "SpeakerMap":
        try:
            raw = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ModelError([f"speaker map is not valid JSON: {exc}"])
        if not isinstance(raw, dict):
            raise ModelError(["speaker map must be a JSON object"])
        entries = {}
        violations = []
        for label, value in raw.items():
            if not isinstance(value, dict) or "action" not in value:
                violations.append(f"entry {label!r} must be an object with an 'action' field")
                continue
            extra = set(value) - {"action", "name"}
            if extra:
                violations.append(f"entry {label!r} has unknown fields {sorted(extra)}")
                continue
            try:
                entries[label] = SpeakerAction(value["action"], value.get("name"))
            except ModelError as exc:
                violations.extend(f"entry {label!r}: {v}" for v in exc.violations)
        if violations:
            raise ModelError(violations)
        return cls(entries)

    def to_json(self) -> str:
        raw = {}
        for label, action in self.entries.items():
            entry: dict[str, str] = {"action": action.kind}
            if action.kind == "rename":
                entry["name"] = action.name
            raw[label] = entry
        return json.dumps(raw, ensure_ascii=False, indent=2) + "\n"


# ---------------------------------------------------------------------------
# Conversion configuration
# ---------------------------------------------------------------------------

TIMESTAMP_MODES = ("verbatim", "fps")
OUTPUT_STYLES = ("inline", "block")


@dataclass(frozen=True)
class ConversionConfig:
    """Everything the rewrite pipeline needs to know.

    ``verbatim`` reuses the two frame digits as the fraction unchanged (the
    default); ``fps`` converts frames to centiseconds for the given frame
    rate. ``fps`` is ignored in verbatim mode.
    """

    timestamp_mode: str = "verbatim"  # "verbatim" | "fps"
    fps: Fraction | None = None  # required (> 0) iff timestamp_mode == "fps"
    output_style: str = "inline"  # "inline" | "block"
    speaker_map: SpeakerMap = field(default_factory=SpeakerMap)
    line_ending: LineEnding = LineEnding.LF
    keep_end_timestamp: bool = False

    def __post_init__(self):
        violations = []
        if self.timestamp_mode not in TIMESTAMP_MODES:
            violations.append(f"unknown timestamp mode {self.timestamp_mode!r}")
        if self.timestamp_mode == "fps":
            if self.fps is None:
                violations.append("fps mode requires a frame rate")
            elif self.fps <= 0:
                violations.append(f"frame rate must be positive, got {self.fps}")
        if self.output_style not in OUTPUT_STYLES:
            violations.append(f"unknown output style {self.output_style!r}")
        if violations:
            raise ModelError(violations)
