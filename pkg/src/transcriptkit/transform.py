"""The rewrite pipeline: timestamp conversion, end-stamp removal, speaker mapping, rendering.

Everything here is a pure function; :func:`convert` composes the whole
pipeline deterministically, so equal (transcript, config) pairs always
yield byte-identical output.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from fractions import Fraction

from transcriptkit.model import (
    BracketTimestamp,
    ConversionConfig,
    SpeakerMap,
    Timecode,
    Transcript,
)


class ConversionError(ValueError):
    """A segment could not be converted (e.g. frame index ≥ frame rate)."""

    def __init__(self, message: str, source_line: int | None = None):
        if source_line:
            message = f"line {source_line}: {message}"
        super().__init__(message)
        self.source_line = source_line


@dataclass(frozen=True)
class RenderedTranscript:
    """Final output text plus bookkeeping about how it was produced."""

    text: str
    style: str  # "inline" | "block"
    segments_rendered: int


def convert_timecode(
    t: Timecode,
    mode: str = "verbatim",
    fps: Fraction | int | None = None,
) -> BracketTimestamp:
    """Convert a frame-based timecode to a bracket timestamp.

    Verbatim mode reuses the two frame digits as the fraction unchanged;
    fps mode converts frames to centiseconds, rounding half up. Integer
    rates never round up to a full second, but fractional rates barely
    above the frame index can (frame 99 at 99.2 fps), so the carry is
    propagated through the clock fields.
    """
    hours, minutes, seconds = t.hours, t.minutes, t.seconds
    if mode == "verbatim":
        centis = t.frames
    elif mode == "fps":
        if fps is None or fps <= 0:
            raise ConversionError(f"fps mode requires a positive frame rate, got {fps}")
        if t.frames >= fps:
            raise ConversionError(f"frame index {t.frames} exceeds frame rate {fps}")
        centis = int(Fraction(t.frames, 1) / Fraction(fps) * 100 + Fraction(1, 2))
        if centis == 100:
            centis = 0
            seconds += 1
            if seconds == 60:
                seconds, minutes = 0, minutes + 1
                if minutes == 60:
                    minutes, hours = 0, hours + 1
    else:
        raise ConversionError(f"unknown timestamp mode {mode!r}")
    return BracketTimestamp(hours, minutes, seconds, f"{centis:02d}")


def strip_end_timestamps(t: Transcript) -> Transcript:
    """Clear every segment's end timecode; everything else is untouched."""
    return replace(t, segments=tuple(replace(seg, end=None) for seg in t.segments))


def apply_speaker_map(t: Transcript, m: SpeakerMap) -> Transcript:
    """Rename/remove speaker labels per the map; labels absent from it are kept."""
    segments = []
    for seg in t.segments:
        if seg.speaker is None:
            segments.append(seg)
            continue
        action = m.action_for(seg.speaker)
        if action.kind == "rename":
            segments.append(replace(seg, speaker=action.name))
        elif action.kind == "remove":
            segments.append(replace(seg, speaker=None))
        else:
            segments.append(seg)
    return replace(t, segments=tuple(segments))


def render(t: Transcript, cfg: ConversionConfig) -> RenderedTranscript:
    """Render a transcript as output text, converting timecodes on the way.

    Inline style emits one paragraph per segment, ``[HH:MM:SS.XX] Speaker:
    text`` (the speaker part, colon and space included, is omitted for
    unlabeled segments). Block style emits the timestamp line, the speaker
    line if any, then the text. Paragraphs are separated by one blank
    line; a non-empty file ends with exactly one line ending.

    The config's speaker map is NOT applied here — use
    :func:`apply_speaker_map` or :func:`convert` for that.
    """
    eol = cfg.line_ending.value
    paragraphs = []
    for seg in t.segments:
        try:
            stamp = convert_timecode(seg.start, cfg.timestamp_mode, cfg.fps).render()
            if seg.end is not None:
                stamp += " - " + convert_timecode(seg.end, cfg.timestamp_mode, cfg.fps).render()
        except ConversionError as exc:
            raise ConversionError(str(exc), source_line=seg.source_line) from None

        if cfg.output_style == "inline":
            speaker_part = f"{seg.speaker}: " if seg.speaker is not None else ""
            paragraphs.append(f"{stamp} {speaker_part}{seg.text}")
        else:
            lines = [stamp]
            if seg.speaker is not None:
                lines.append(seg.speaker)
            lines.append(seg.text)
            paragraphs.append(eol.join(lines))

    text = (eol + eol).join(paragraphs) + eol if paragraphs else ""
    return RenderedTranscript(text=text, style=cfg.output_style, segments_rendered=len(t.segments))


def convert(t: Transcript, cfg: ConversionConfig) -> RenderedTranscript:
    """Run the full pipeline: drop end stamps (unless kept), map speakers, render."""
    if not cfg.keep_end_timestamp:
        t = strip_end_timestamps(t)
    t = apply_speaker_map(t, cfg.speaker_map)
    return render(t, cfg)
