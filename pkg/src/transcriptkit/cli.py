"""Command-line front end: convert, speakers, wer, stats.

Deterministic and pipeline-safe: results go to stdout (or ``--output``),
all diagnostics go to stderr, and warnings never change the exit code.
No command performs any network I/O.
"""

from __future__ import annotations

import argparse
import contextlib
import os
import sys
import tempfile
from enum import IntEnum
from fractions import Fraction

from transcriptkit.ingest import (
    DEFAULT_CSV_COLUMNS,
    ParseDiagnostic,
    ParseResult,
    decode_export_bytes,
    parse_export_csv,
    parse_export_text,
)
from transcriptkit.metrics import (
    MetricsError,
    NormalizationPolicy,
    aggregate_stats,
    compute_savings,
    format_ratio,
    format_stats_text,
    format_wer_text,
    normalize_tokens,
    read_session_csv,
    wer,
)
from transcriptkit.model import ConversionConfig, LineEnding, ModelError, SpeakerMap
from transcriptkit.transform import ConversionError, convert


class ExitStatus(IntEnum):
    OK = 0
    USAGE = 1  # bad flags or flag combinations
    PARSE = 2  # input files could not be parsed/converted
    IO = 3  # input/output paths could not be read/written


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with code 2 on usage errors; that code is reserved for
    # input parse errors here, so raise and let main() map it to 1.
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------------------
# Shared helpers
# ---------------------------------------------------------------------------


def _read_bytes(path: str) -> bytes:
    with open(path, "rb") as handle:
        return handle.read()


def _read_text(path: str) -> str:
    data = _read_bytes(path)
    return data.decode("utf-8-sig")


def _write_atomic(path: str, data: bytes) -> None:
    """Write via temp file + rename so interrupted runs never leave truncated output."""
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".transcriptkit-")
    try:
        with os.fdopen(fd, "wb") as handle:
            handle.write(data)
        os.replace(tmp, path)
    except BaseException:
        with contextlib.suppress(OSError):
            os.unlink(tmp)
        raise


def _print_diagnostics(path: str, diagnostics: tuple[ParseDiagnostic, ...]) -> None:
    for diag in diagnostics:
        print(f"{path}:{diag.line}: {diag.severity}: {diag.message}", file=sys.stderr)


def _parse_positive_rational(text: str, flag: str) -> Fraction:
    try:
        value = Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"{flag}: not a number: {text!r}")
    if value <= 0:
        raise UsageError(f"{flag} must be positive, got {text}")
    return value


def _parse_csv_columns(text: str) -> dict[str, str]:
    """Parse 'start=Start Time,end=End Time,...' into a role→header mapping."""
    columns = dict(DEFAULT_CSV_COLUMNS)
    for part in text.split(","):
        if not part.strip():
            continue
        role, sep, header = part.partition("=")
        role = role.strip()
        if not sep or role not in DEFAULT_CSV_COLUMNS:
            raise UsageError(
                f"--csv-columns: expected role=header pairs with roles "
                f"{'/'.join(DEFAULT_CSV_COLUMNS)}, got {part.strip()!r}"
            )
        columns[role] = header.strip()
    return columns


def _parse_input(args) -> ParseResult:
    data = _read_bytes(args.input)
    text, diagnostics = decode_export_bytes(data)
    if text is None:
        _print_diagnostics(args.input, diagnostics)
        return ParseResult(None, diagnostics)
    is_csv = args.input.lower().endswith(".csv") or getattr(args, "csv_columns", None)
    if is_csv:
        columns = _parse_csv_columns(args.csv_columns) if getattr(args, "csv_columns", None) else None
        result = parse_export_csv(text, columns=columns, source_name=args.input)
    else:
        result = parse_export_text(text, source_name=args.input)
    _print_diagnostics(args.input, result.diagnostics)
    return result


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_convert(args) -> ExitStatus:
    if args.speakers and args.drop_speakers:
        raise UsageError("--speakers and --drop-speakers are mutually exclusive")
    if args.mode == "fps" and args.fps is None:
        raise UsageError("--fps is required with --mode fps")
    fps = _parse_positive_rational(args.fps, "--fps") if args.mode == "fps" else None

    result = _parse_input(args)
    if not result.ok:
        return ExitStatus.PARSE
    transcript = result.transcript

    speaker_map = SpeakerMap()
    if args.speakers:
        speaker_map = SpeakerMap.from_json(_read_text(args.speakers))
    elif args.drop_speakers:
        speaker_map = SpeakerMap.drop_all(transcript.speakers)

    config = ConversionConfig(
        timestamp_mode=args.mode,
        fps=fps,
        output_style=args.style,
        speaker_map=speaker_map,
        line_ending=LineEnding.from_name(args.eol),
        keep_end_timestamp=args.keep_end,
    )
    rendered = convert(transcript, config)
    data = rendered.text.encode("utf-8")
    if args.output:
        _write_atomic(args.output, data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.buffer.flush()
    return ExitStatus.OK


def cmd_speakers(args) -> ExitStatus:
    result = _parse_input(args)
    if not result.ok:
        return ExitStatus.PARSE
    transcript = result.transcript

    counts = {label: 0 for label in transcript.speakers}
    for segment in transcript.segments:
        if segment.speaker is not None:
            counts[segment.speaker] += 1
    for label in transcript.speakers:
        print(f"{label} ({counts[label]})")
    if not transcript.speakers:
        print("note: no speaker labels detected", file=sys.stderr)

    if args.init_map:
        _write_atomic(args.init_map, SpeakerMap.keep_all(transcript.speakers).to_json().encode("utf-8"))
    return ExitStatus.OK


def cmd_wer(args) -> ExitStatus:
    policy = NormalizationPolicy(
        unicode_normalize=not args.no_unicode_normalization,
        lowercase=not args.no_lowercase,
        strip_punctuation=not args.keep_punctuation,
    )
    reference = normalize_tokens(_read_text(args.ref), policy)
    hypothesis = normalize_tokens(_read_text(args.hyp), policy)
    report = wer(reference, hypothesis)
    sys.stdout.write(format_wer_text(report))
    return ExitStatus.OK


def cmd_stats(args) -> ExitStatus:
    rows = read_session_csv(_read_text(args.table))
    report = aggregate_stats(rows)
    sys.stdout.write(format_stats_text(rows, report))
    if args.baseline is not None:
        baseline = _parse_positive_rational(args.baseline, "--baseline")
        saving = compute_savings(report.ratio_of_sums, baseline)
        sys.stdout.write(f"savings_vs_baseline {format_ratio(saving, 1)}%\n")
    return ExitStatus.OK


# ---------------------------------------------------------------------------
# Parser and entry point
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="transcriptkit",
        description="Convert ASR pre-transcripts into analysis-ready transcripts "
        "and evaluate transcription effort and accuracy.",
    )
    sub = parser.add_subparsers(dest="command", metavar="command")

    p = sub.add_parser("convert", help="convert an export file to bracket-timestamp text")
    p.add_argument("--input", required=True, help="export file (.txt or .csv)")
    p.add_argument("--output", help="output file (stdout if omitted); written atomically")
    p.add_argument("--mode", choices=["verbatim", "fps"], default="verbatim",
                   help="timestamp rewrite: reuse frame digits verbatim, or convert at a frame rate")
    p.add_argument("--fps", help="frame rate for --mode fps (e.g. 25, 29.97, 30000/1001)")
    p.add_argument("--style", choices=["inline", "block"], default="inline",
                   help="one paragraph per segment, or timestamp/speaker/text lines")
    p.add_argument("--speakers", help="speaker map JSON (label -> keep/rename/remove)")
    p.add_argument("--drop-speakers", action="store_true", help="remove every speaker label")
    p.add_argument("--keep-end", action="store_true", help="keep segment end timestamps")
    p.add_argument("--eol", choices=["lf", "crlf"], default="lf", help="output line endings")
    p.add_argument("--csv-columns", help="CSV role=header pairs, e.g. 'start=Start Time,text=Text'")
    p.set_defaults(func=cmd_convert)

    p = sub.add_parser("speakers", help="list detected speaker labels")
    p.add_argument("--input", required=True, help="export file (.txt or .csv)")
    p.add_argument("--init-map", help="write a keep-everything speaker map skeleton to this JSON file")
    p.set_defaults(func=cmd_speakers)

    p = sub.add_parser("wer", help="word error rate between a reference and a hypothesis")
    p.add_argument("--ref", required=True, help="reference transcript (plain text)")
    p.add_argument("--hyp", required=True, help="hypothesis transcript (plain text)")
    p.add_argument("--no-lowercase", action="store_true", help="keep letter case")
    p.add_argument("--keep-punctuation", action="store_true", help="keep punctuation characters")
    p.add_argument("--no-unicode-normalization", action="store_true", help="skip NFKC normalization")
    p.set_defaults(func=cmd_wer)

    p = sub.add_parser("stats", help="work-time statistics over a session table")
    p.add_argument("--table", required=True, help="sessions CSV: id, work_time, interview_duration, wer")
    p.add_argument("--baseline", help="manual work/duration baseline ratio; adds a savings line")
    p.set_defaults(func=cmd_stats)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if getattr(args, "func", None) is None:
            raise UsageError("a command is required (convert, speakers, wer, stats)")
        return int(args.func(args))
    except UsageError as exc:
        print(f"transcriptkit: error: {exc}", file=sys.stderr)
        return int(ExitStatus.USAGE)
    except (ModelError, MetricsError, ConversionError, UnicodeDecodeError) as exc:
        print(f"transcriptkit: error: {exc}", file=sys.stderr)
        return int(ExitStatus.PARSE)
    except OSError as exc:
        print(f"transcriptkit: error: {exc}", file=sys.stderr)
        return int(ExitStatus.IO)


def run() -> None:
    raise SystemExit(main())
