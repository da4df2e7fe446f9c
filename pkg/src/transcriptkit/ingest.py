"""Parsers for the text and CSV transcript exports of the editing software.

The text export is a sequence of blank-line-separated blocks::

    00:02:01:16 - 00:02:07:09
    Speaker 1
    I think if you're in a totally neutral environment ...

i.e. a timecode-range line, an optional speaker line, and one or more text
lines. Errors abort (no transcript is produced); warnings do not. Both
parsers are pure functions of their input text: identical bytes yield
identical transcripts and diagnostics.
"""

from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass

from transcriptkit.model import LineEnding, ModelError, Segment, Timecode, Transcript

DEFAULT_LABEL_PATTERN = r"Speaker \d+"

#: Default CSV role → header assignment; headers are matched case-insensitively.
DEFAULT_CSV_COLUMNS = {
    "start": "Start Time",
    "end": "End Time",
    "speaker": "Speaker Name",
    "text": "Text",
}

_TC = r"(\d{2})([:;])(\d{2})([:;])(\d{2})([:;])(\d{2})"
_TIMECODE_RE = re.compile(_TC)
_RANGE_RE = re.compile(rf"^\s*{_TC}\s*-\s*{_TC}\s*$")


@dataclass(frozen=True)
class ParseDiagnostic:
    """One parser finding, pointing at a 1-based source line."""

    line: int
    severity: str  # "warning" | "error"
    message: str

    def __str__(self) -> str:
        return f"line {self.line}: {self.severity}: {self.message}"


@dataclass(frozen=True)
class ParseResult:
    """Outcome of a parse: a transcript unless any error diagnostic occurred."""

    transcript: Transcript | None
    diagnostics: tuple[ParseDiagnostic, ...] = ()

    @property
    def ok(self) -> bool:
        return self.transcript is not None

    @property
    def errors(self) -> tuple[ParseDiagnostic, ...]:
        return tuple(d for d in self.diagnostics if d.severity == "error")

    @property
    def warnings(self) -> tuple[ParseDiagnostic, ...]:
        return tuple(d for d in self.diagnostics if d.severity == "warning")


def _timecode_from_match(fields: tuple[str, ...]) -> Timecode:
    hh, sep1, mm, sep2, ss, sep3, ff = fields
    return Timecode(
        hours=int(hh),
        minutes=int(mm),
        seconds=int(ss),
        frames=int(ff),
        separator_style="semicolon" if ";" in (sep1, sep2, sep3) else "colon",
    )


def _detect_line_ending(source: str) -> LineEnding:
    return LineEnding.CRLF if "\r\n" in source else LineEnding.LF


def _split_lines(source: str) -> list[str]:
    # split("\n") rather than splitlines(): unicode line separators such as
    #   must stay inside the text, not create phantom lines.
    return [line.rstrip("\r") for line in source.split("\n")]


def parse_export_text(
    source: str,
    label_pattern: str = DEFAULT_LABEL_PATTERN,
    source_name: str = "",
) -> ParseResult:
    """Parse a plain-text export into a transcript plus diagnostics.

    ``label_pattern`` is the regex a whole line must match to count as a
    speaker label; the default covers the auto-generated English labels.
    """
    line_ending = _detect_line_ending(source)
    if source.startswith("﻿"):
        source = source[1:]
    label_re = re.compile(label_pattern)

    diagnostics: list[ParseDiagnostic] = []
    segments: list[Segment] = []

    blocks: list[list[tuple[int, str]]] = []
    current: list[tuple[int, str]] = []
    for lineno, line in enumerate(_split_lines(source), start=1):
        if line.strip():
            current.append((lineno, line))
        elif current:
            blocks.append(current)
            current = []
    if current:
        blocks.append(current)

    previous_start: Timecode | None = None
    for block in blocks:
        first_line_no, first_line = block[0]
        match = _RANGE_RE.match(first_line)
        if match is None:
            diagnostics.append(
                ParseDiagnostic(
                    first_line_no,
                    "error",
                    "malformed timecode line (expected 'HH:MM:SS:FF - HH:MM:SS:FF' "
                    "with two-digit fields)",
                )
            )
            continue
        groups = match.groups()
        try:
            start = _timecode_from_match(groups[:7])
            end = _timecode_from_match(groups[7:])
        except ModelError as exc:
            for violation in exc.violations:
                diagnostics.append(ParseDiagnostic(first_line_no, "error", f"invalid timecode: {violation}"))
            continue

        rest = block[1:]
        speaker = None
        if rest and label_re.fullmatch(rest[0][1].strip()):
            speaker = rest[0][1].strip()
            rest = rest[1:]
        else:
            diagnostics.append(
                ParseDiagnostic(first_line_no, "warning", "no speaker label in block (single-speaker export?)")
            )

        text = " ".join(line.strip() for _, line in rest)
        if not text:
            diagnostics.append(ParseDiagnostic(first_line_no, "error", "block has no text"))
            continue

        if previous_start is not None and start.sort_key() < previous_start.sort_key():
            diagnostics.append(
                ParseDiagnostic(first_line_no, "warning", "start timecode earlier than previous segment")
            )
        previous_start = start
        if end.sort_key() < start.sort_key():
            diagnostics.append(
                ParseDiagnostic(first_line_no, "warning", "end timecode precedes start timecode")
            )

        segments.append(
            Segment(start=start, end=end, speaker=speaker, text=text, source_line=first_line_no)
        )

    if any(d.severity == "error" for d in diagnostics):
        return ParseResult(None, tuple(diagnostics))
    return ParseResult(
        Transcript(tuple(segments), source_name=source_name, line_ending=line_ending),
        tuple(diagnostics),
    )


# ---------------------------------------------------------------------------
# CSV export
# ---------------------------------------------------------------------------


def _detect_delimiter(header_line: str) -> str:
    counts = [(header_line.count(d), -i, d) for i, d in enumerate([",", ";", "\t"])]
    return max(counts)[2]


def _parse_cell_timecode(cell: str) -> Timecode | None:
    match = _TIMECODE_RE.fullmatch(cell.strip())
    if match is None:
        return None
    return _timecode_from_match(match.groups())


def parse_export_csv(
    source: str,
    columns: dict[str, str] | None = None,
    source_name: str = "",
) -> ParseResult:
    """Parse a CSV export; ``columns`` assigns roles {start, end, speaker, text} to headers.

    The first row must be a header; the delimiter is auto-detected among
    comma, semicolon and tab. Roles ``start`` and ``text`` are required.
    """
    line_ending = _detect_line_ending(source)
    if source.startswith("﻿"):
        source = source[1:]
    columns = dict(DEFAULT_CSV_COLUMNS if columns is None else columns)

    diagnostics: list[ParseDiagnostic] = []
    for role in ("start", "text"):
        if not columns.get(role):
            diagnostics.append(ParseDiagnostic(1, "error", f"required column unmapped: no header assigned to {role!r}"))
    if diagnostics:
        return ParseResult(None, tuple(diagnostics))

    first_line = source.split("\n", 1)[0]
    reader = csv.reader(io.StringIO(source, newline=""), delimiter=_detect_delimiter(first_line))
    try:
        header = next(reader)
    except StopIteration:
        return ParseResult(Transcript((), source_name=source_name, line_ending=line_ending))
    except csv.Error as exc:
        return ParseResult(None, (ParseDiagnostic(1, "error", f"malformed CSV: {exc}"),))

    index_of = {name.strip().lower(): i for i, name in enumerate(header)}
    role_index: dict[str, int | None] = {}
    for role, header_name in columns.items():
        idx = index_of.get(header_name.strip().lower()) if header_name else None
        role_index[role] = idx
        if idx is None and header_name:
            severity = "error" if role in ("start", "text") else "warning"
            diagnostics.append(
                ParseDiagnostic(1, severity, f"column {header_name!r} for role {role!r} not found in header")
            )
    if any(d.severity == "error" for d in diagnostics):
        return ParseResult(None, tuple(diagnostics))

    def cell(row: list[str], role: str) -> str:
        idx = role_index.get(role)
        if idx is None or idx >= len(row):
            return ""
        return row[idx]

    segments: list[Segment] = []
    previous_start: Timecode | None = None
    while True:
        try:
            row = next(reader)
        except StopIteration:
            break
        except csv.Error as exc:
            diagnostics.append(ParseDiagnostic(reader.line_num, "error", f"malformed CSV row: {exc}"))
            break
        lineno = reader.line_num
        if not any(col.strip() for col in row):
            continue

        end_cell = cell(row, "end").strip()
        try:
            start = _parse_cell_timecode(cell(row, "start"))
            end = _parse_cell_timecode(end_cell) if end_cell else None
        except ModelError as exc:
            for violation in exc.violations:
                diagnostics.append(ParseDiagnostic(lineno, "error", f"invalid timecode: {violation}"))
            continue
        if start is None:
            diagnostics.append(
                ParseDiagnostic(lineno, "error", f"malformed start timecode {cell(row, 'start').strip()!r}")
            )
            continue
        if end_cell and end is None:
            diagnostics.append(ParseDiagnostic(lineno, "error", f"malformed end timecode {end_cell!r}"))
            continue

        speaker = cell(row, "speaker").strip() or None
        if speaker is None and role_index.get("speaker") is not None:
            diagnostics.append(ParseDiagnostic(lineno, "warning", "row has no speaker label"))

        text = " ".join(part.strip() for part in cell(row, "text").split("\n"))
        text = text.strip()
        if not text:
            diagnostics.append(ParseDiagnostic(lineno, "error", "row has no text"))
            continue

        if previous_start is not None and start.sort_key() < previous_start.sort_key():
            diagnostics.append(ParseDiagnostic(lineno, "warning", "start timecode earlier than previous segment"))
        previous_start = start
        if end is not None and end.sort_key() < start.sort_key():
            diagnostics.append(ParseDiagnostic(lineno, "warning", "end timecode precedes start timecode"))

        segments.append(Segment(start=start, end=end, speaker=speaker, text=text, source_line=lineno))

    if any(d.severity == "error" for d in diagnostics):
        return ParseResult(None, tuple(diagnostics))
    return ParseResult(
        Transcript(tuple(segments), source_name=source_name, line_ending=line_ending),
        tuple(diagnostics),
    )


# ---------------------------------------------------------------------------
# Byte-level entry points (UTF-8, BOM tolerated)
# ---------------------------------------------------------------------------


def decode_export_bytes(data: bytes) -> tuple[str | None, tuple[ParseDiagnostic, ...]]:
    """Decode raw file bytes as UTF-8 (BOM consumed silently)."""
    try:
        return data.decode("utf-8-sig"), ()
    except UnicodeDecodeError as exc:
        line = data[: exc.start].count(b"\n") + 1
        return None, (ParseDiagnostic(line, "error", f"not valid UTF-8: {exc.reason} at byte {exc.start}"),)


def parse_export_bytes(
    data: bytes,
    label_pattern: str = DEFAULT_LABEL_PATTERN,
    source_name: str = "",
) -> ParseResult:
    """Byte-level wrapper around :func:`parse_export_text`; never raises on bad input."""
    text, diagnostics = decode_export_bytes(data)
    if text is None:
        return ParseResult(None, diagnostics)
    return parse_export_text(text, label_pattern=label_pattern, source_name=source_name)
