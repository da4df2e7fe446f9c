"""Word error rate via minimal edit alignment, plus work-time statistics.

WER is (substitutions + deletions + insertions) / reference word count
from a minimal word-level alignment at unit costs. Session statistics
reproduce the usual effort table: per-session work/duration ratios, exact
sums, ratio of sums, and the arithmetic mean of per-session WERs. All
arithmetic is exact (integers and rationals); rounding happens only when
formatting.
"""

from __future__ import annotations

import csv
import io
import re
import unicodedata
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal
from fractions import Fraction

from transcriptkit import alignment


class MetricsError(ValueError):
    """Invalid metrics input (empty reference, malformed session table, ...)."""


# ---------------------------------------------------------------------------
# Tokenization
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NormalizationPolicy:
    """Switchable token-normalization steps, applied in field order."""

    unicode_normalize: bool = True  # NFKC
    lowercase: bool = True
    strip_punctuation: bool = True  # remove all Unicode P* characters


def normalize_tokens(text: str, policy: NormalizationPolicy = NormalizationPolicy()) -> list[str]:
    """Normalize text and split it into WER tokens.

    Default policy: NFKC-normalize, lowercase, strip punctuation
    characters, then split on whitespace. Tokens emptied by punctuation
    stripping disappear along with their surrounding whitespace.
    """
    if policy.unicode_normalize:
        text = unicodedata.normalize("NFKC", text)
    if policy.lowercase:
        text = text.lower()
    if policy.strip_punctuation:
        text = "".join(c for c in text if not unicodedata.category(c).startswith("P"))
    return text.split()


# ---------------------------------------------------------------------------
# Word error rate
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class WerReport:
    """Edit-alignment counts against a reference of ``reference_words`` tokens."""

    substitutions: int
    deletions: int
    insertions: int
    reference_words: int

    def __post_init__(self):
        violations = []
        if min(self.substitutions, self.deletions, self.insertions) < 0:
            violations.append("counts must be non-negative")
        if self.reference_words <= 0:
            violations.append("reference word count must be positive")
        elif self.substitutions + self.deletions > self.reference_words:
            violations.append("substitutions + deletions cannot exceed the reference length")
        if violations:
            raise MetricsError("; ".join(violations))

    @property
    def edit_distance(self) -> int:
        return self.substitutions + self.deletions + self.insertions

    @property
    def wer(self) -> Fraction:
        """(S + D + I) / N; may exceed 1 for insertion-heavy hypotheses."""
        return Fraction(self.edit_distance, self.reference_words)


def wer(reference: list[str], hypothesis: list[str]) -> WerReport:
    """Word error rate of ``hypothesis`` against a non-empty ``reference``.

    Counts come from a minimal-cost alignment; equal-cost ties are broken
    substitution-first (over deletion+insertion pairs), which can shift the
    S/D/I decomposition but never the total.
    """
    if not reference:
        raise MetricsError("reference has no words")
    ref_ids, hyp_ids = alignment.encode_tokens(reference, hypothesis)
    s, d, i = alignment.align_counts(ref_ids, hyp_ids)
    return WerReport(substitutions=s, deletions=d, insertions=i, reference_words=len(reference))


# ---------------------------------------------------------------------------
# Session statistics
# ---------------------------------------------------------------------------

_DURATION_RE = re.compile(r"(\d+):([0-5]\d):([0-5]\d)")


def parse_duration(text: str) -> int:
    """Parse ``HH:MM:SS`` into whole seconds."""
    match = _DURATION_RE.fullmatch(text.strip())
    if match is None:
        raise MetricsError(f"malformed duration {text!r} (expected HH:MM:SS)")
    h, m, s = (int(g) for g in match.groups())
    return h * 3600 + m * 60 + s


def format_duration(seconds: int) -> str:
    return f"{seconds // 3600:02d}:{seconds % 3600 // 60:02d}:{seconds % 60:02d}"


def format_ratio(value: Fraction, places: int) -> str:
    """Format an exact rational to fixed decimal places, rounding half up."""
    quantum = Decimal(1).scaleb(-places)
    return str((Decimal(value.numerator) / Decimal(value.denominator)).quantize(quantum, rounding=ROUND_HALF_UP))


@dataclass(frozen=True)
class SessionRecord:
    """One transcription session: correction work time vs. recording length."""

    id: str
    work_time: int  # seconds
    interview_duration: int  # seconds
    wer: Fraction

    def __post_init__(self):
        violations = []
        if self.work_time <= 0:
            violations.append(f"work time must be positive, got {self.work_time}")
        if self.interview_duration <= 0:
            violations.append(f"interview duration must be positive, got {self.interview_duration}")
        if self.wer < 0:
            violations.append(f"wer must be non-negative, got {self.wer}")
        if violations:
            raise MetricsError("; ".join(violations))


@dataclass(frozen=True)
class StatsReport:
    """Per-session ratios plus exact aggregates over all sessions."""

    per_row: tuple[tuple[Fraction, Fraction], ...]  # (work/duration, duration/work) per session
    sum_work: int  # seconds
    sum_duration: int  # seconds
    ratio_of_sums: Fraction
    inverse_ratio_of_sums: Fraction
    mean_wer_of_rows: Fraction


def row_ratio(record: SessionRecord) -> tuple[Fraction, Fraction]:
    """Exact (work/duration, duration/work) for one session."""
    ratio = Fraction(record.work_time, record.interview_duration)
    return (ratio, 1 / ratio)


def aggregate_stats(rows: list[SessionRecord]) -> StatsReport:
    """Aggregate session records: exact sums, ratio of sums, mean of row WERs.

    The aggregate ratio is sum(work)/sum(duration), not the mean of the
    per-row ratios; the aggregate WER is the plain arithmetic mean of the
    row WERs (unweighted by word counts).
    """
    if not rows:
        raise MetricsError("no session rows")
    sum_work = sum(r.work_time for r in rows)
    sum_duration = sum(r.interview_duration for r in rows)
    ratio_of_sums = Fraction(sum_work, sum_duration)
    return StatsReport(
        per_row=tuple(row_ratio(r) for r in rows),
        sum_work=sum_work,
        sum_duration=sum_duration,
        ratio_of_sums=ratio_of_sums,
        inverse_ratio_of_sums=1 / ratio_of_sums,
        mean_wer_of_rows=sum((r.wer for r in rows), Fraction(0)) / len(rows),
    )


def compute_savings(ratio: Fraction, manual_baseline_ratio: Fraction) -> Fraction:
    """Work-time saving vs. a manual-transcription baseline ratio, as a percentage.

    The baseline (hours of manual work per hour of recording) is a user
    input; published estimates vary too much to hard-code one.
    """
    if manual_baseline_ratio <= 0:
        raise MetricsError(f"baseline ratio must be positive, got {manual_baseline_ratio}")
    return (1 - Fraction(ratio) / Fraction(manual_baseline_ratio)) * 100


# ---------------------------------------------------------------------------
# Session table I/O and report formatting
# ---------------------------------------------------------------------------

SESSION_COLUMNS = ("id", "work_time", "interview_duration", "wer")


def read_session_csv(source: str) -> list[SessionRecord]:
    """Read session records from CSV with columns id, work_time, interview_duration, wer."""
    if source.startswith("﻿"):
        source = source[1:]
    reader = csv.DictReader(io.StringIO(source, newline=""))
    header = [name.strip().lower() for name in (reader.fieldnames or [])]
    missing = [col for col in SESSION_COLUMNS if col not in header]
    if missing:
        raise MetricsError(f"session table is missing columns: {', '.join(missing)}")
    rows = []
    for lineno, raw in enumerate(reader, start=2):
        cells = {str(k).strip().lower(): (v or "").strip() for k, v in raw.items() if k is not None}
        try:
            wer_text = cells.get("wer", "")
            try:
                wer_value = Fraction(wer_text)
            except (ValueError, ZeroDivisionError):
                raise MetricsError(f"malformed wer value {wer_text!r}")
            rows.append(
                SessionRecord(
                    id=cells.get("id", ""),
                    work_time=parse_duration(cells.get("work_time", "")),
                    interview_duration=parse_duration(cells.get("interview_duration", "")),
                    wer=wer_value,
                )
            )
        except MetricsError as exc:
            raise MetricsError(f"row {lineno}: {exc}") from None
    return rows


def format_wer_text(report: WerReport) -> str:
    return (
        f"substitutions {report.substitutions}\n"
        f"deletions {report.deletions}\n"
        f"insertions {report.insertions}\n"
        f"reference_words {report.reference_words}\n"
        f"wer {format_ratio(report.wer, 4)}\n"
    )


def _stats_table(rows: list[SessionRecord], report: StatsReport) -> list[tuple[str, ...]]:
    lines = [("id", "work", "duration", "work/dur", "dur/work", "wer")]
    for record, (ratio, inverse) in zip(rows, report.per_row):
        lines.append(
            (
                record.id,
                format_duration(record.work_time),
                format_duration(record.interview_duration),
                format_ratio(ratio, 3),
                format_ratio(inverse, 3),
                format_ratio(record.wer, 4),
            )
        )
    lines.append(
        (
            "sum/mean",
            format_duration(report.sum_work),
            format_duration(report.sum_duration),
            format_ratio(report.ratio_of_sums, 3),
            format_ratio(report.inverse_ratio_of_sums, 3),
            format_ratio(report.mean_wer_of_rows, 4),
        )
    )
    return lines


def format_stats_text(rows: list[SessionRecord], report: StatsReport) -> str:
    table = _stats_table(rows, report)
    widths = [max(len(row[col]) for row in table) for col in range(len(table[0]))]
    out = []
    for row in table:
        out.append("  ".join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
    return "\n".join(out) + "\n"


def format_stats_csv(rows: list[SessionRecord], report: StatsReport) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    for row in _stats_table(rows, report):
        writer.writerow(row)
    return buffer.getvalue()
