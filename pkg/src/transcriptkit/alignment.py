"""Edit-alignment backend selection: compiled kernel when built, pure Python otherwise.

The word-level alignment is the one quadratic inner loop in this package
(a pair of hour-long transcripts is ~10^8 DP cells), so it ships as a C
extension with a byte-compatible pure-Python fallback. Which one is active
is visible via :data:`BACKEND` / :func:`backend_name`.
"""

from __future__ import annotations

from array import array
from typing import Iterable, Sequence

try:
    from transcriptkit import _edit_align as _backend

    BACKEND = "c-extension"
except ImportError:  # built from source without compiling the extension
    from transcriptkit import _edit_align_py as _backend

    BACKEND = "pure-python"


def backend_name() -> str:
    return BACKEND


def align_counts(ref_ids: Sequence[int], hyp_ids: Sequence[int]) -> tuple[int, int, int]:
    """(substitutions, deletions, insertions) of a minimal unit-cost alignment.

    Inputs are sequences of integer token ids (see :func:`encode_tokens`).
    S + D + I is the word-level Levenshtein distance between the sequences.
    """
    return _backend.align_counts(array("i", ref_ids), array("i", hyp_ids))


def encode_tokens(*token_lists: Iterable[str]) -> list[list[int]]:
    """Map tokens to integer ids, consistently across all the given lists."""
    ids: dict[str, int] = {}
    encoded = []
    for tokens in token_lists:
        encoded.append([ids.setdefault(tok, len(ids)) for tok in tokens])
    return encoded
