import { describe, expect, it } from "vitest";

import {
    convert,
    convertPreview,
    convertTimecode,
    parseExport,
    parseExportCsv,
    parseExportText,
    parseFrameRate,
    speakerCounts,
    speakers,
    type ConversionConfig,
    type Timecode,
} from "../src/core.js";

const TWO_BLOCKS = [
    "00:02:01:16 - 00:02:07:09",
    "Speaker 1",
    "Right, so the first thing we tried",
    "didn't actually work.",
    "",
    "00:02:08:00 - 00:02:11:11",
    "Speaker 2",
    "Yeah, I remember.",
    "",
].join("\n");

function config(overrides: Partial<ConversionConfig> = {}): ConversionConfig {
    return {
        mode: "verbatim",
        fps: null,
        style: "inline",
        speakerMap: {},
        eol: "lf",
        keepEnd: false,
        ...overrides,
    };
}

function tc(hours: number, minutes: number, seconds: number, frames: number): Timecode {
    return { hours, minutes, seconds, frames, separatorStyle: "colon" };
}

describe("parseExportText", () => {
    it("parses a two-block export", () => {
        const result = parseExportText(TWO_BLOCKS);
        expect(result.diagnostics).toEqual([]);
        expect(result.transcript).not.toBeNull();
        const segments = result.transcript!.segments;
        expect(segments).toHaveLength(2);
        expect(segments[0].speaker).toBe("Speaker 1");
        expect(segments[0].text).toBe("Right, so the first thing we tried didn't actually work.");
        expect(segments[0].sourceLine).toBe(1);
        expect(segments[1].start).toEqual(tc(0, 2, 8, 0));
        expect(segments[1].end).toEqual(tc(0, 2, 11, 11));
        expect(segments[1].sourceLine).toBe(6);
    });

    it("strips a leading byte-order mark", () => {
        const result = parseExportText("﻿" + TWO_BLOCKS);
        expect(result.transcript!.segments).toHaveLength(2);
    });

    it("treats an empty file as an empty transcript", () => {
        const result = parseExportText("");
        expect(result.transcript!.segments).toEqual([]);
        expect(result.diagnostics).toEqual([]);
    });

    it("reports a malformed timecode line with its line number", () => {
        const result = parseExportText("not a timecode\nSpeaker 1\nwords\n");
        expect(result.transcript).toBeNull();
        expect(result.diagnostics).toHaveLength(1);
        expect(result.diagnostics[0].line).toBe(1);
        expect(result.diagnostics[0].severity).toBe("error");
    });

    it("reports out-of-range timecodes instead of crashing", () => {
        const result = parseExportText("00:61:00:00 - 00:62:00:00\nSpeaker 1\nhello\n");
        expect(result.transcript).toBeNull();
        const messages = result.diagnostics.map((d) => d.message);
        // The start timecode is parsed first; its violations mask the end's.
        expect(messages).toEqual(["invalid timecode: minutes out of range (61)"]);
    });

    it("warns when a block has no speaker label", () => {
        const result = parseExportText("00:00:01:00 - 00:00:02:00\njust words\n");
        expect(result.transcript!.segments[0].speaker).toBeNull();
        expect(result.diagnostics).toHaveLength(1);
        expect(result.diagnostics[0].severity).toBe("warning");
        expect(result.diagnostics[0].message).toContain("no speaker label");
    });

    it("warns on non-monotonic starts and inverted ranges", () => {
        const source = [
            "00:00:10:00 - 00:00:05:00",
            "Speaker 1",
            "first",
            "",
            "00:00:02:00 - 00:00:03:00",
            "Speaker 1",
            "second",
            "",
        ].join("\n");
        const result = parseExportText(source);
        expect(result.transcript!.segments).toHaveLength(2);
        const messages = result.diagnostics.map((d) => d.message);
        expect(messages).toContain("end timecode precedes start timecode");
        expect(messages).toContain("start timecode earlier than previous segment");
    });

    it("accepts semicolon-separated drop-frame style timecodes", () => {
        const result = parseExportText("00:00:01;02 - 00:00:02;03\nSpeaker 1\nwords\n");
        expect(result.diagnostics).toEqual([]);
        expect(result.transcript!.segments[0].start.separatorStyle).toBe("semicolon");
    });
});

describe("parseExportCsv", () => {
    const HEADER = "Start Time,End Time,Speaker Name,Text";

    it("parses rows with the default headers", () => {
        const result = parseExportCsv(`${HEADER}\n00:00:01:00,00:00:02:00,Speaker 1,hello there\n`);
        expect(result.diagnostics).toEqual([]);
        const segments = result.transcript!.segments;
        expect(segments).toHaveLength(1);
        expect(segments[0].speaker).toBe("Speaker 1");
        expect(segments[0].text).toBe("hello there");
        expect(segments[0].start).toEqual(tc(0, 0, 1, 0));
    });

    it("keeps delimiters inside quoted cells", () => {
        const result = parseExportCsv(`${HEADER}\n00:00:01:00,,Speaker 1,"hello, there"\n`);
        expect(result.transcript!.segments[0].text).toBe("hello, there");
        expect(result.transcript!.segments[0].end).toBeNull();
    });

    it("collapses embedded newlines in quoted text cells", () => {
        const result = parseExportCsv(`${HEADER}\n00:00:01:00,,Speaker 1,"line one\nline two"\n`);
        expect(result.transcript!.segments[0].text).toBe("line one line two");
    });

    it("unescapes doubled quotes", () => {
        const result = parseExportCsv(`${HEADER}\n00:00:01:00,,Speaker 1,"she said ""hi"""\n`);
        expect(result.transcript!.segments[0].text).toBe('she said "hi"');
    });

    it("detects a semicolon delimiter from the header line", () => {
        const result = parseExportCsv(
            "Start Time;End Time;Speaker Name;Text\n00:00:01:00;;Speaker 1;hello\n",
        );
        expect(result.diagnostics).toEqual([]);
        expect(result.transcript!.segments[0].text).toBe("hello");
    });

    it("reports a missing required header as an error", () => {
        const result = parseExportCsv("Start Time,Speaker Name\n00:00:01:00,Speaker 1\n");
        expect(result.transcript).toBeNull();
        expect(result.diagnostics.some((d) => d.severity === "error" && d.message.includes("'Text'"))).toBe(true);
    });

    it("reports malformed and out-of-range timecodes per row", () => {
        const bad = `${HEADER}\n99:99:99:99,,Speaker 1,hello\nnonsense,,Speaker 1,hello\n`;
        const result = parseExportCsv(bad);
        expect(result.transcript).toBeNull();
        const messages = result.diagnostics.map((d) => d.message);
        expect(messages).toContain("invalid timecode: minutes out of range (99)");
        expect(messages).toContain("malformed start timecode 'nonsense'");
    });

    it("skips blank rows", () => {
        const result = parseExportCsv(`${HEADER}\n\n00:00:01:00,,Speaker 1,hello\n,,,\n`);
        expect(result.transcript!.segments).toHaveLength(1);
    });
});

describe("parseExport", () => {
    it("dispatches on the file extension", () => {
        const csv = parseExport("session.CSV", "Start Time,End Time,Speaker Name,Text\n00:00:01:00,,Speaker 1,hi\n");
        expect(csv.transcript!.segments).toHaveLength(1);
        const text = parseExport("session.txt", TWO_BLOCKS);
        expect(text.transcript!.segments).toHaveLength(2);
    });
});

describe("speakers", () => {
    it("lists labels in first-appearance order with counts", () => {
        const transcript = parseExportText(TWO_BLOCKS).transcript!;
        expect(speakers(transcript)).toEqual(["Speaker 1", "Speaker 2"]);
        expect(speakerCounts(transcript).get("Speaker 1")).toBe(1);
        expect(speakerCounts(transcript).get("Speaker 2")).toBe(1);
    });
});

describe("convertTimecode", () => {
    it("reuses the frame digits verbatim", () => {
        expect(convertTimecode(tc(0, 2, 1, 16), "verbatim", null)).toBe("[00:02:01.16]");
    });

    it("converts frames to centiseconds at 25 fps", () => {
        expect(convertTimecode(tc(0, 2, 1, 16), "fps", parseFrameRate("25"))).toBe("[00:02:01.64]");
        expect(convertTimecode(tc(0, 2, 11, 11), "fps", parseFrameRate("25"))).toBe("[00:02:11.44]");
    });

    it("rounds halves up", () => {
        expect(convertTimecode(tc(0, 0, 0, 1), "fps", parseFrameRate("8"))).toBe("[00:00:00.13]");
    });

    it("handles fractional rates", () => {
        expect(convertTimecode(tc(0, 2, 1, 16), "fps", parseFrameRate("29.97"))).toBe("[00:02:01.53]");
        expect(convertTimecode(tc(0, 2, 11, 11), "fps", parseFrameRate("29.97"))).toBe("[00:02:11.37]");
    });

    it("carries into the clock fields when rounding reaches a full second", () => {
        expect(convertTimecode(tc(0, 0, 59, 99), "fps", parseFrameRate("99.2"))).toBe("[00:01:00.00]");
        expect(convertTimecode(tc(0, 59, 59, 99), "fps", parseFrameRate("99.2"))).toBe("[01:00:00.00]");
    });

    it("matches verbatim output at 100 fps", () => {
        for (let frames = 0; frames < 100; frames++) {
            const t = tc(1, 2, 3, frames);
            expect(convertTimecode(t, "fps", parseFrameRate("100"))).toBe(convertTimecode(t, "verbatim", null));
        }
    });

    it("rejects frame indexes at or above the frame rate", () => {
        expect(() => convertTimecode(tc(0, 0, 0, 25), "fps", parseFrameRate("25"))).toThrowError(
            /frame index 25 exceeds frame rate 25/,
        );
    });
});

describe("parseFrameRate", () => {
    it("accepts integers, decimals, and ratios", () => {
        expect(parseFrameRate("25")).toMatchObject({ num: 25, den: 1 });
        expect(parseFrameRate("29.97")).toMatchObject({ num: 2997, den: 100 });
        expect(parseFrameRate("30000/1001")).toMatchObject({ num: 30000, den: 1001 });
    });

    it("rejects junk and non-positive rates", () => {
        expect(() => parseFrameRate("abc")).toThrowError(/not a frame rate/);
        expect(() => parseFrameRate("0")).toThrowError(/positive/);
        expect(() => parseFrameRate("-25")).toThrowError(/not a frame rate/);
    });
});

describe("convert", () => {
    const transcript = parseExportText(TWO_BLOCKS).transcript!;

    it("renders inline verbatim output by default", () => {
        expect(convert(transcript, config())).toBe(
            "[00:02:01.16] Speaker 1: Right, so the first thing we tried didn't actually work.\n" +
                "\n" +
                "[00:02:08.00] Speaker 2: Yeah, I remember.\n",
        );
    });

    it("applies renames", () => {
        const out = convert(
            transcript,
            config({
                speakerMap: {
                    "Speaker 1": { action: "rename", name: "Bonnie" },
                    "Speaker 2": { action: "rename", name: "Fiona" },
                },
            }),
        );
        expect(out).toContain("[00:02:01.16] Bonnie: Right,");
        expect(out).toContain("[00:02:08.00] Fiona: Yeah,");
    });

    it("drops removed speakers' labels but keeps their words", () => {
        const out = convert(transcript, config({ speakerMap: { "Speaker 1": { action: "remove" } } }));
        expect(out).toContain("[00:02:01.16] Right, so the first thing");
        expect(out).toContain("Speaker 2: Yeah,");
        expect(out).not.toContain("Speaker 1");
    });

    it("renders block style with one field per line", () => {
        const out = convert(transcript, config({ style: "block" }));
        expect(out.startsWith("[00:02:01.16]\nSpeaker 1\nRight, so the first thing")).toBe(true);
    });

    it("keeps end timestamps on request", () => {
        const out = convert(transcript, config({ keepEnd: true }));
        expect(out).toContain("[00:02:01.16] - [00:02:07.09] Speaker 1:");
    });

    it("can emit CRLF line endings", () => {
        const out = convert(transcript, config({ eol: "crlf" }));
        expect(out).toContain("\r\n\r\n[00:02:08.00]");
        expect(out.endsWith("\r\n")).toBe(true);
    });

    it("renders an empty transcript as an empty string", () => {
        expect(convert(parseExportText("").transcript!, config())).toBe("");
    });
});

describe("convertPreview", () => {
    it("shows at most the requested number of segments", () => {
        const blocks: string[] = [];
        for (let i = 0; i < 25; i++) {
            blocks.push(`00:00:${String(i * 2).padStart(2, "0")}:00 - 00:00:${String(i * 2 + 1).padStart(2, "0")}:00`);
            blocks.push("Speaker 1");
            blocks.push(`segment ${i}`);
            blocks.push("");
        }
        const transcript = parseExportText(blocks.join("\n")).transcript!;
        expect(transcript.segments).toHaveLength(25);
        const preview = convertPreview(transcript, config(), 20);
        expect(preview.trim().split("\n\n")).toHaveLength(20);
        expect(preview).toContain("segment 19");
        expect(preview).not.toContain("segment 20");
    });
});
