"""Toolkit for turning ASR pre-transcripts from video-editing exports into
analysis-ready transcripts, and for evaluating transcription effort and accuracy."""

from transcriptkit.ingest import (
    ParseDiagnostic,
    ParseResult,
    parse_export_bytes,
    parse_export_csv,
    parse_export_text,
)
from transcriptkit.metrics import (
    MetricsError,
    NormalizationPolicy,
    SessionRecord,
    StatsReport,
    WerReport,
    aggregate_stats,
    compute_savings,
    format_duration,
    format_ratio,
    format_stats_csv,
    format_stats_text,
    format_wer_text,
    normalize_tokens,
    parse_duration,
    read_session_csv,
    row_ratio,
    wer,
)
from transcriptkit.model import (
    KEEP,
    REMOVE,
    BracketTimestamp,
    ConversionConfig,
    LineEnding,
    ModelError,
    Segment,
    SpeakerAction,
    SpeakerMap,
    Timecode,
    Transcript,
    rename,
    validate_timecode,
)
from transcriptkit.transform import (
    ConversionError,
    RenderedTranscript,
    apply_speaker_map,
    convert,
    convert_timecode,
    render,
    strip_end_timestamps,
)

__version__ = "0.1.0"

__all__ = [
    "BracketTimestamp",
    "ConversionConfig",
    "ConversionError",
    "KEEP",
    "LineEnding",
    "MetricsError",
    "ModelError",
    "NormalizationPolicy",
    "ParseDiagnostic",
    "ParseResult",
    "REMOVE",
    "RenderedTranscript",
    "Segment",
    "SessionRecord",
    "SpeakerAction",
    "SpeakerMap",
    "StatsReport",
    "Timecode",
    "Transcript",
    "WerReport",
    "aggregate_stats",
    "apply_speaker_map",
    "compute_savings",
    "convert",
    "convert_timecode",
    "format_duration",
    "format_ratio",
    "format_stats_csv",
    "format_stats_text",
    "format_wer_text",
    "normalize_tokens",
    "parse_duration",
    "parse_export_bytes",
    "parse_export_csv",
    "parse_export_text",
    "read_session_csv",
    "rename",
    "render",
    "row_ratio",
    "strip_end_timestamps",
    "validate_timecode",
    "wer",
    "__version__",
]
