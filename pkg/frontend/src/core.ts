/**
 * Converter core: parsing and rewriting of editing-software exports.
 *
 * This is a faithful port of the Python package's ingest/transform
 * semantics so the browser UI can run fully offline. Byte-for-byte
 * agreement with the CLI is enforced by the shared conformance suite
 * (conformance/cases.json at the repository root).
 */

export interface Timecode {
    hours: number;
    minutes: number;
    seconds: number;
    frames: number;
    separatorStyle: "colon" | "semicolon";
}

export interface Segment {
    start: Timecode;
    end: Timecode | null;
    speaker: string | null;
    text: string;
    sourceLine: number;
}

export interface Transcript {
    segments: Segment[];
    sourceName: string;
    lineEnding: "\n" | "\r\n";
}

export interface Diagnostic {
    line: number;
    severity: "warning" | "error";
    message: string;
}

export interface ParseResult {
    transcript: Transcript | null;
    diagnostics: Diagnostic[];
}

export type SpeakerActionKind = "keep" | "rename" | "remove";

export interface SpeakerAction {
    action: SpeakerActionKind;
    name?: string;
}

/** Label -> action; labels absent from the map are kept. */
export type SpeakerMap = Record<string, SpeakerAction>;

export interface ConversionConfig {
    mode: "verbatim" | "fps";
    /** Frame rate as entered ("25", "29.97", "30000/1001"); null in verbatim mode. */
    fps: string | null;
    style: "inline" | "block";
    speakerMap: SpeakerMap;
    eol: "lf" | "crlf";
    keepEnd: boolean;
}

const TC = "(\\d{2})([:;])(\\d{2})([:;])(\\d{2})([:;])(\\d{2})";
const RANGE_RE = new RegExp(`^\\s*${TC}\\s*-\\s*${TC}\\s*$`);
const TIMECODE_RE = new RegExp(`^${TC}$`);
const LABEL_RE = /^Speaker \d+$/;

// Default CSV role -> header assignment; headers match case-insensitively.
export const DEFAULT_CSV_COLUMNS: Record<string, string> = {
    start: "Start Time",
    end: "End Time",
    speaker: "Speaker Name",
    text: "Text",
};

function timecodeViolations(hours: number, minutes: number, seconds: number, frames: number): string[] {
    const violations: string[] = [];
    if (hours < 0) violations.push(`hours out of range (${hours})`);
    if (minutes < 0 || minutes > 59) violations.push(`minutes out of range (${minutes})`);
    if (seconds < 0 || seconds > 59) violations.push(`seconds out of range (${seconds})`);
    if (frames < 0 || frames > 99) violations.push(`frames out of range (${frames})`);
    return violations;
}

function timecodeFromGroups(groups: string[]): { timecode: Timecode; violations: string[] } {
    const [hh, sep1, mm, sep2, ss, sep3, ff] = groups;
    const timecode: Timecode = {
        hours: parseInt(hh, 10),
        minutes: parseInt(mm, 10),
        seconds: parseInt(ss, 10),
        frames: parseInt(ff, 10),
        separatorStyle: sep1 === ";" || sep2 === ";" || sep3 === ";" ? "semicolon" : "colon",
    };
    return {
        timecode,
        violations: timecodeViolations(timecode.hours, timecode.minutes, timecode.seconds, timecode.frames),
    };
}

function sortKey(t: Timecode): number {
    return ((t.hours * 60 + t.minutes) * 60 + t.seconds) * 100 + t.frames;
}

function detectLineEnding(source: string): "\n" | "\r\n" {
    return source.includes("\r\n") ? "\r\n" : "\n";
}

function stripBom(source: string): string {
    return source.startsWith("﻿") ? source.slice(1) : source;
}

export function parseExportText(source: string, sourceName = ""): ParseResult {
    const lineEnding = detectLineEnding(source);
    source = stripBom(source);

    const diagnostics: Diagnostic[] = [];
    const segments: Segment[] = [];

    // Group consecutive non-blank lines into blocks, keeping 1-based line numbers.
    const blocks: Array<Array<[number, string]>> = [];
    let current: Array<[number, string]> = [];
    const lines = source.split("\n").map((line) => line.replace(/\r+$/, ""));
    lines.forEach((line, i) => {
        if (line.trim()) {
            current.push([i + 1, line]);
        } else if (current.length) {
            blocks.push(current);
            current = [];
        }
    });
    if (current.length) blocks.push(current);

    let previousStart: Timecode | null = null;
    for (const block of blocks) {
        const [firstLineNo, firstLine] = block[0];
        const match = RANGE_RE.exec(firstLine);
        if (!match) {
            diagnostics.push({
                line: firstLineNo,
                severity: "error",
                message: "malformed timecode line (expected 'HH:MM:SS:FF - HH:MM:SS:FF' with two-digit fields)",
            });
            continue;
        }
        // Start is parsed before end, so its violations mask the end's.
        const startParse = timecodeFromGroups(match.slice(1, 8));
        const endParse = timecodeFromGroups(match.slice(8, 15));
        const violations = startParse.violations.length ? startParse.violations : endParse.violations;
        if (violations.length) {
            for (const violation of violations) {
                diagnostics.push({ line: firstLineNo, severity: "error", message: `invalid timecode: ${violation}` });
            }
            continue;
        }
        const start = startParse.timecode;
        const end = endParse.timecode;

        let rest = block.slice(1);
        let speaker: string | null = null;
        if (rest.length && LABEL_RE.test(rest[0][1].trim())) {
            speaker = rest[0][1].trim();
            rest = rest.slice(1);
        } else {
            diagnostics.push({
                line: firstLineNo,
                severity: "warning",
                message: "no speaker label in block (single-speaker export?)",
            });
        }

        const text = rest.map(([, line]) => line.trim()).join(" ");
        if (!text) {
            diagnostics.push({ line: firstLineNo, severity: "error", message: "block has no text" });
            continue;
        }

        if (previousStart !== null && sortKey(start) < sortKey(previousStart)) {
            diagnostics.push({
                line: firstLineNo,
                severity: "warning",
                message: "start timecode earlier than previous segment",
            });
        }
        previousStart = start;
        if (sortKey(end) < sortKey(start)) {
            diagnostics.push({
                line: firstLineNo,
                severity: "warning",
                message: "end timecode precedes start timecode",
            });
        }

        segments.push({ start, end, speaker, text, sourceLine: firstLineNo });
    }

    if (diagnostics.some((d) => d.severity === "error")) {
        return { transcript: null, diagnostics };
    }
    return { transcript: { segments, sourceName, lineEnding }, diagnostics };
}

// ---------------------------------------------------------------------------
// CSV export
// ---------------------------------------------------------------------------

function detectDelimiter(headerLine: string): string {
    let best = ",";
    let bestCount = -1;
    // Tie goes to the earlier candidate, comma first.
    for (const candidate of [",", ";", "\t"]) {
        const count = headerLine.split(candidate).length - 1;
        if (count > bestCount) {
            best = candidate;
            bestCount = count;
        }
    }
    return best;
}

interface CsvRow {
    cells: string[];
    /** Physical source lines consumed up to and including this row. */
    lineNum: number;
}

function scanCsv(source: string, delimiter: string): CsvRow[] {
    const rows: CsvRow[] = [];
    let cells: string[] = [];
    let field = "";
    let sawAnything = false;
    let inQuotes = false;
    let afterClosingQuote = false;
    let linesConsumed = 0;

    const endField = () => {
        cells.push(field);
        field = "";
        afterClosingQuote = false;
    };
    const endRecord = () => {
        if (sawAnything) {
            endField();
            rows.push({ cells, lineNum: linesConsumed });
        } else {
            rows.push({ cells: [], lineNum: linesConsumed });
        }
        cells = [];
        sawAnything = false;
    };

    let i = 0;
    while (i < source.length) {
        const ch = source[i];
        if (inQuotes) {
            if (ch === '"') {
                if (source[i + 1] === '"') {
                    field += '"';
                    i += 2;
                    continue;
                }
                inQuotes = false;
                afterClosingQuote = true;
            } else {
                if (ch === "\n") linesConsumed += 1;
                field += ch;
            }
            i += 1;
            continue;
        }
        if (ch === '"' && field === "" && !afterClosingQuote) {
            inQuotes = true;
            sawAnything = true;
            i += 1;
            continue;
        }
        if (ch === delimiter) {
            sawAnything = true;
            endField();
            i += 1;
            continue;
        }
        if (ch === "\n" || ch === "\r") {
            if (ch === "\r" && source[i + 1] === "\n") i += 1;
            linesConsumed += 1;
            endRecord();
            i += 1;
            continue;
        }
        sawAnything = true;
        field += ch;
        i += 1;
    }
    if (sawAnything || field) {
        linesConsumed += 1;
        endRecord();
    }
    return rows;
}

export function parseExportCsv(
    source: string,
    columns: Record<string, string> | null = null,
    sourceName = "",
): ParseResult {
    const lineEnding = detectLineEnding(source);
    source = stripBom(source);
    // A caller-provided mapping replaces the defaults outright.
    const roleHeaders = columns === null ? { ...DEFAULT_CSV_COLUMNS } : { ...columns };

    const diagnostics: Diagnostic[] = [];
    for (const role of ["start", "text"]) {
        if (!roleHeaders[role]) {
            diagnostics.push({
                line: 1,
                severity: "error",
                message: `required column unmapped: no header assigned to '${role}'`,
            });
        }
    }
    if (diagnostics.length) return { transcript: null, diagnostics };

    const rows = scanCsv(source, detectDelimiter(source.split("\n", 1)[0]));
    if (!rows.length) {
        return { transcript: { segments: [], sourceName, lineEnding }, diagnostics: [] };
    }

    const header = rows[0].cells;
    const indexOf = new Map<string, number>();
    header.forEach((name, i) => indexOf.set(name.trim().toLowerCase(), i));
    const roleIndex = new Map<string, number>();
    for (const [role, headerName] of Object.entries(roleHeaders)) {
        if (!headerName) continue;
        const idx = indexOf.get(headerName.trim().toLowerCase());
        if (idx === undefined) {
            diagnostics.push({
                line: 1,
                severity: role === "start" || role === "text" ? "error" : "warning",
                message: `column '${headerName}' for role '${role}' not found in header`,
            });
        } else {
            roleIndex.set(role, idx);
        }
    }
    if (diagnostics.some((d) => d.severity === "error")) {
        return { transcript: null, diagnostics };
    }

    const cell = (row: string[], role: string): string => {
        const idx = roleIndex.get(role);
        return idx === undefined || idx >= row.length ? "" : row[idx];
    };

    const parseCell = (raw: string): { timecode: Timecode | null; violations: string[] } => {
        const match = TIMECODE_RE.exec(raw.trim());
        if (!match) return { timecode: null, violations: [] };
        const parsed = timecodeFromGroups(match.slice(1, 8));
        return parsed.violations.length
            ? { timecode: null, violations: parsed.violations }
            : { timecode: parsed.timecode, violations: [] };
    };

    const segments: Segment[] = [];
    let previousStart: Timecode | null = null;
    for (const { cells: row, lineNum } of rows.slice(1)) {
        if (!row.some((col) => col.trim())) continue;

        const endCell = cell(row, "end").trim();
        // Start is parsed before end, so its violations mask the end's.
        const startParse = parseCell(cell(row, "start"));
        const endParse =
            endCell && !startParse.violations.length
                ? parseCell(endCell)
                : { timecode: null, violations: [] as string[] };
        const violations = startParse.violations.length ? startParse.violations : endParse.violations;
        if (violations.length) {
            for (const violation of violations) {
                diagnostics.push({ line: lineNum, severity: "error", message: `invalid timecode: ${violation}` });
            }
            continue;
        }
        const start = startParse.timecode;
        if (start === null) {
            diagnostics.push({
                line: lineNum,
                severity: "error",
                message: `malformed start timecode '${cell(row, "start").trim()}'`,
            });
            continue;
        }
        if (endCell && endParse.timecode === null) {
            diagnostics.push({ line: lineNum, severity: "error", message: `malformed end timecode '${endCell}'` });
            continue;
        }

        const speaker = cell(row, "speaker").trim() || null;
        if (speaker === null && roleIndex.has("speaker")) {
            diagnostics.push({ line: lineNum, severity: "warning", message: "row has no speaker label" });
        }

        const text = cell(row, "text")
            .split("\n")
            .map((part) => part.trim())
            .join(" ")
            .trim();
        if (!text) {
            diagnostics.push({ line: lineNum, severity: "error", message: "row has no text" });
            continue;
        }

        if (previousStart !== null && sortKey(start) < sortKey(previousStart)) {
            diagnostics.push({
                line: lineNum,
                severity: "warning",
                message: "start timecode earlier than previous segment",
            });
        }
        previousStart = start;
        if (endParse.timecode !== null && sortKey(endParse.timecode) < sortKey(start)) {
            diagnostics.push({ line: lineNum, severity: "warning", message: "end timecode precedes start timecode" });
        }

        segments.push({ start, end: endParse.timecode, speaker, text, sourceLine: lineNum });
    }

    if (diagnostics.some((d) => d.severity === "error")) {
        return { transcript: null, diagnostics };
    }
    return { transcript: { segments, sourceName, lineEnding }, diagnostics };
}

/** Dispatch on the file name: .csv uses the CSV grammar, everything else the text grammar. */
export function parseExport(fileName: string, source: string): ParseResult {
    return fileName.toLowerCase().endsWith(".csv")
        ? parseExportCsv(source, null, fileName)
        : parseExportText(source, fileName);
}

// ---------------------------------------------------------------------------
// Speakers
// ---------------------------------------------------------------------------

/** Distinct speaker labels in first-appearance order. */
export function speakers(transcript: Transcript): string[] {
    const seen: string[] = [];
    for (const segment of transcript.segments) {
        if (segment.speaker !== null && !seen.includes(segment.speaker)) {
            seen.push(segment.speaker);
        }
    }
    return seen;
}

export function speakerCounts(transcript: Transcript): Map<string, number> {
    const counts = new Map<string, number>();
    for (const segment of transcript.segments) {
        if (segment.speaker !== null) {
            counts.set(segment.speaker, (counts.get(segment.speaker) ?? 0) + 1);
        }
    }
    return counts;
}

export function applySpeakerMap(transcript: Transcript, map: SpeakerMap): Transcript {
    const segments = transcript.segments.map((segment) => {
        if (segment.speaker === null) return segment;
        const action = map[segment.speaker];
        if (!action || action.action === "keep") return segment;
        if (action.action === "rename") return { ...segment, speaker: action.name ?? segment.speaker };
        return { ...segment, speaker: null };
    });
    return { ...transcript, segments };
}

// ---------------------------------------------------------------------------
// Timestamp conversion and rendering
// ---------------------------------------------------------------------------

export interface FrameRate {
    num: number;
    den: number;
    text: string;
}

/** Parse a frame rate: integer, decimal, or integer ratio ("30000/1001"). */
export function parseFrameRate(text: string): FrameRate {
    const trimmed = text.trim();
    let num: number;
    let den: number;
    let match: RegExpExecArray | null;
    if ((match = /^(\d+)\s*\/\s*(\d+)$/.exec(trimmed))) {
        num = parseInt(match[1], 10);
        den = parseInt(match[2], 10);
    } else if ((match = /^(\d+)(?:\.(\d+))?$/.exec(trimmed))) {
        const decimals = match[2] ?? "";
        num = parseInt(match[1] + decimals, 10);
        den = 10 ** decimals.length;
    } else {
        throw new Error(`not a frame rate: '${text}'`);
    }
    if (!Number.isSafeInteger(num) || !Number.isSafeInteger(den) || num <= 0 || den <= 0) {
        throw new Error(`frame rate must be positive, got '${text}'`);
    }
    return { num, den, text: trimmed };
}

function pad2(value: number): string {
    return String(value).padStart(2, "0");
}

/**
 * Verbatim mode reuses the two frame digits unchanged; fps mode converts
 * frames to centiseconds, rounding half up, carrying into the clock
 * fields when a fractional rate rounds a frame up to a full second.
 */
export function convertTimecode(t: Timecode, mode: "verbatim" | "fps", fps: FrameRate | null): string {
    let { hours, minutes, seconds } = t;
    let centis: number;
    if (mode === "verbatim") {
        centis = t.frames;
    } else {
        if (fps === null) throw new Error("fps mode requires a frame rate");
        if (t.frames * fps.den >= fps.num) {
            throw new Error(`frame index ${t.frames} exceeds frame rate ${fps.text}`);
        }
        // floor(frames/fps*100 + 1/2) in exact integer arithmetic.
        centis = Math.floor((200 * t.frames * fps.den + fps.num) / (2 * fps.num));
        if (centis === 100) {
            centis = 0;
            seconds += 1;
            if (seconds === 60) {
                seconds = 0;
                minutes += 1;
                if (minutes === 60) {
                    minutes = 0;
                    hours += 1;
                }
            }
        }
    }
    return `[${pad2(hours)}:${pad2(minutes)}:${pad2(seconds)}.${pad2(centis)}]`;
}

export function render(transcript: Transcript, config: ConversionConfig): string {
    const eol = config.eol === "crlf" ? "\r\n" : "\n";
    const fps = config.mode === "fps" ? parseFrameRate(config.fps ?? "") : null;
    const paragraphs: string[] = [];
    for (const segment of transcript.segments) {
        let stamp = convertTimecode(segment.start, config.mode, fps);
        if (segment.end !== null) {
            stamp += " - " + convertTimecode(segment.end, config.mode, fps);
        }
        if (config.style === "inline") {
            const speakerPart = segment.speaker !== null ? `${segment.speaker}: ` : "";
            paragraphs.push(`${stamp} ${speakerPart}${segment.text}`);
        } else {
            const lines = [stamp];
            if (segment.speaker !== null) lines.push(segment.speaker);
            lines.push(segment.text);
            paragraphs.push(lines.join(eol));
        }
    }
    return paragraphs.length ? paragraphs.join(eol + eol) + eol : "";
}

/** Full pipeline: drop end stamps (unless kept), map speakers, render. */
export function convert(transcript: Transcript, config: ConversionConfig): string {
    let working = transcript;
    if (!config.keepEnd) {
        working = { ...working, segments: working.segments.map((s) => ({ ...s, end: null })) };
    }
    working = applySpeakerMap(working, config.speakerMap);
    return render(working, config);
}

/** Render only the first `limit` segments (the live preview window). */
export function convertPreview(transcript: Transcript, config: ConversionConfig, limit = 20): string {
    const window: Transcript = { ...transcript, segments: transcript.segments.slice(0, limit) };
    return convert(window, config);
}
