"""Regenerate the conformance fixture matrix under conformance/.

Every case pairs an input export and a conversion configuration with the
CLI's byte-exact output. Other implementations of the converter (the
browser UI, ports) replay cases.json and must match the expected bytes.

Run from the repository root::

    python scripts/gen_conformance.py
"""

from __future__ import annotations

import json
import pathlib
import shutil
import sys

ROOT = pathlib.Path(__file__).resolve().parent.parent
FIXTURES = ROOT / "tests" / "fixtures"
CONFORMANCE = ROOT / "conformance"

sys.path.insert(0, str(ROOT / "src"))

from transcriptkit.cli import main  # noqa: E402

INPUTS = ["two_speakers.txt", "no_speaker.txt", "export.csv"]
MAPS = ["bonnie_fiona.json", "remove_speaker1.json"]

# name, input, config. Config keys mirror the CLI flags one-to-one.
CASES = [
    ("two_speakers_inline_default", "two_speakers.txt", {}),
    ("two_speakers_inline_rename", "two_speakers.txt", {"speakers": "maps/bonnie_fiona.json"}),
    ("two_speakers_inline_remove1", "two_speakers.txt", {"speakers": "maps/remove_speaker1.json"}),
    ("two_speakers_inline_drop_all", "two_speakers.txt", {"dropSpeakers": True}),
    ("two_speakers_block", "two_speakers.txt", {"style": "block"}),
    ("two_speakers_inline_fps25", "two_speakers.txt", {"mode": "fps", "fps": "25"}),
    ("two_speakers_inline_crlf", "two_speakers.txt", {"eol": "crlf"}),
    ("two_speakers_block_keep_end", "two_speakers.txt", {"style": "block", "keepEnd": True}),
    ("no_speaker_inline_default", "no_speaker.txt", {}),
    ("export_csv_inline_default", "export.csv", {}),
    ("export_csv_block_fps2997", "export.csv", {"style": "block", "mode": "fps", "fps": "29.97"}),
]

DEFAULTS = {
    "mode": "verbatim",
    "fps": None,
    "style": "inline",
    "speakers": None,
    "dropSpeakers": False,
    "keepEnd": False,
    "eol": "lf",
}


def argv_for(case_config: dict, input_path: pathlib.Path, output_path: pathlib.Path) -> list[str]:
    cfg = {**DEFAULTS, **case_config}
    argv = ["convert", "--input", str(input_path), "--output", str(output_path)]
    argv += ["--mode", cfg["mode"], "--style", cfg["style"], "--eol", cfg["eol"]]
    if cfg["fps"] is not None:
        argv += ["--fps", cfg["fps"]]
    if cfg["speakers"] is not None:
        argv += ["--speakers", str(CONFORMANCE / cfg["speakers"])]
    if cfg["dropSpeakers"]:
        argv.append("--drop-speakers")
    if cfg["keepEnd"]:
        argv.append("--keep-end")
    return argv


def generate() -> None:
    for sub in ("inputs", "maps", "expected"):
        (CONFORMANCE / sub).mkdir(parents=True, exist_ok=True)
    for name in INPUTS:
        shutil.copyfile(FIXTURES / name, CONFORMANCE / "inputs" / name)
    for name in MAPS:
        shutil.copyfile(FIXTURES / name, CONFORMANCE / "maps" / name)

    manifest = []
    for name, input_name, config in CASES:
        expected_rel = f"expected/{name}.txt"
        code = main(argv_for(config, CONFORMANCE / "inputs" / input_name, CONFORMANCE / expected_rel))
        if code != 0:
            raise SystemExit(f"case {name!r} failed with exit code {code}")
        manifest.append(
            {
                "name": name,
                "input": f"inputs/{input_name}",
                "config": {**DEFAULTS, **config},
                "expected": expected_rel,
            }
        )

    cases_path = CONFORMANCE / "cases.json"
    cases_path.write_text(json.dumps(manifest, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {len(manifest)} cases under {CONFORMANCE}")


if __name__ == "__main__":
    generate()
