/**
 * Replays the shared conformance suite (conformance/ at the repository
 * root) and requires the web core's output to match the CLI's expected
 * bytes exactly. This is the contract that lets the browser port stand
 * in for the Python converter.
 */

import { readFileSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

import {
    convert,
    parseExportCsv,
    parseExportText,
    speakers,
    type ConversionConfig,
    type SpeakerMap,
} from "../src/core.js";

interface CaseConfig {
    mode: "verbatim" | "fps";
    fps: string | null;
    style: "inline" | "block";
    speakers: string | null;
    dropSpeakers: boolean;
    keepEnd: boolean;
    eol: "lf" | "crlf";
}

interface ConformanceCase {
    name: string;
    input: string;
    config: CaseConfig;
    expected: string;
}

const conformanceDir = join(dirname(fileURLToPath(import.meta.url)), "..", "..", "conformance");
const cases: ConformanceCase[] = JSON.parse(readFileSync(join(conformanceDir, "cases.json"), "utf8"));

describe("conformance with the command-line converter", () => {
    it("covers both input formats and a speaker map", () => {
        expect(cases.length).toBeGreaterThanOrEqual(10);
        expect(cases.some((c) => c.input.endsWith(".csv"))).toBe(true);
        expect(cases.some((c) => c.input.endsWith(".txt"))).toBe(true);
        expect(cases.some((c) => c.config.speakers !== null)).toBe(true);
    });

    for (const testCase of cases) {
        it(testCase.name, () => {
            const raw = readFileSync(join(conformanceDir, testCase.input), "utf8");
            const result = testCase.input.endsWith(".csv") ? parseExportCsv(raw) : parseExportText(raw);
            expect(result.transcript, "conformance inputs must parse cleanly").not.toBeNull();

            let map: SpeakerMap = {};
            if (testCase.config.speakers) {
                map = JSON.parse(readFileSync(join(conformanceDir, testCase.config.speakers), "utf8"));
            }
            if (testCase.config.dropSpeakers) {
                for (const label of speakers(result.transcript!)) {
                    map[label] = { action: "remove" };
                }
            }

            const config: ConversionConfig = {
                mode: testCase.config.mode,
                fps: testCase.config.fps,
                style: testCase.config.style,
                speakerMap: map,
                eol: testCase.config.eol,
                keepEnd: testCase.config.keepEnd,
            };
            const actual = Buffer.from(convert(result.transcript!, config), "utf8");
            const expected = readFileSync(join(conformanceDir, testCase.expected));
            expect(actual.equals(expected), `bytes differ for ${testCase.name}`).toBe(true);
        });
    }
});
