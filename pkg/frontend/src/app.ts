/**
 * Browser UI for the transcript converter. Everything runs in-page on the
 * loaded file; no request leaves the machine and nothing is persisted.
 */

import {
    convert,
    convertPreview,
    parseExport,
    speakerCounts,
    speakers,
    type ConversionConfig,
    type Diagnostic,
    type SpeakerAction,
    type Transcript,
} from "./core.js";

const PREVIEW_SEGMENTS = 20;

interface SpeakerRowState {
    action: "keep" | "rename" | "remove";
    name: string;
}

interface Session {
    fileName: string;
    transcript: Transcript;
    warnings: Diagnostic[];
    speakerRows: Map<string, SpeakerRowState>;
}

let session: Session | null = null;

function el<T extends HTMLElement>(id: string): T {
    const node = document.getElementById(id);
    if (!node) throw new Error(`missing element #${id}`);
    return node as T;
}

function readConfig(): ConversionConfig {
    const mode = el<HTMLSelectElement>("mode").value === "fps" ? "fps" : "verbatim";
    const speakerMap: Record<string, SpeakerAction> = {};
    if (session) {
        for (const [label, row] of session.speakerRows) {
            if (row.action === "rename" && row.name.trim()) {
                speakerMap[label] = { action: "rename", name: row.name };
            } else if (row.action === "remove") {
                speakerMap[label] = { action: "remove" };
            }
            // An empty rename is rejected inline and treated as keep until fixed.
        }
    }
    return {
        mode,
        fps: mode === "fps" ? el<HTMLInputElement>("fps").value : null,
        style: el<HTMLSelectElement>("style").value === "block" ? "block" : "inline",
        speakerMap,
        eol: el<HTMLSelectElement>("eol").value === "crlf" ? "crlf" : "lf",
        keepEnd: el<HTMLInputElement>("keep-end").checked,
    };
}

function showDiagnostics(diagnostics: Diagnostic[]) {
    const errors = diagnostics.filter((d) => d.severity === "error");
    const warnings = diagnostics.filter((d) => d.severity === "warning");

    const errorPanel = el("errors");
    errorPanel.hidden = errors.length === 0;
    errorPanel.replaceChildren(
        ...errors.map((d) => {
            const line = document.createElement("div");
            line.textContent = `line ${d.line}: ${d.message}`;
            return line;
        }),
    );

    const warningPanel = el("warnings");
    warningPanel.hidden = warnings.length === 0;
    warningPanel.replaceChildren(
        ...warnings.map((d) => {
            const line = document.createElement("div");
            line.textContent = `line ${d.line}: ${d.message}`;
            return line;
        }),
    );
}

function renderSpeakerTable() {
    const table = el("speaker-rows");
    table.replaceChildren();
    if (!session) return;

    const counts = speakerCounts(session.transcript);
    for (const label of speakers(session.transcript)) {
        const row = session.speakerRows.get(label)!;
        const tr = document.createElement("tr");

        const labelCell = document.createElement("td");
        labelCell.textContent = label;
        const countCell = document.createElement("td");
        countCell.textContent = String(counts.get(label) ?? 0);

        const actionCell = document.createElement("td");
        const select = document.createElement("select");
        for (const value of ["keep", "rename", "remove"]) {
            const option = document.createElement("option");
            option.value = value;
            option.textContent = value;
            option.selected = row.action === value;
            select.append(option);
        }
        actionCell.append(select);

        const nameCell = document.createElement("td");
        const nameInput = document.createElement("input");
        nameInput.type = "text";
        nameInput.placeholder = "new name";
        nameInput.value = row.name;
        nameInput.hidden = row.action !== "rename";
        const nameError = document.createElement("span");
        nameError.className = "name-error";
        nameCell.append(nameInput, nameError);

        const refreshValidity = () => {
            const invalid = row.action === "rename" && !row.name.trim();
            nameInput.classList.toggle("invalid", invalid);
            nameError.textContent = invalid ? "name required" : "";
        };

        select.addEventListener("change", () => {
            row.action = select.value as SpeakerRowState["action"];
            nameInput.hidden = row.action !== "rename";
            refreshValidity();
            refreshPreview();
        });
        nameInput.addEventListener("input", () => {
            row.name = nameInput.value;
            refreshValidity();
            refreshPreview();
        });
        refreshValidity();

        tr.append(labelCell, countCell, actionCell, nameCell);
        table.append(tr);
    }
}

function refreshPreview() {
    const preview = el<HTMLPreElement>("preview");
    const previewNote = el("preview-note");
    const downloadButton = el<HTMLButtonElement>("download");
    el<HTMLInputElement>("fps").disabled = el<HTMLSelectElement>("mode").value !== "fps";

    if (!session) {
        preview.textContent = "";
        previewNote.textContent = "";
        downloadButton.disabled = true;
        return;
    }
    const total = session.transcript.segments.length;
    if (total === 0) {
        preview.textContent = "";
        previewNote.textContent = "No segments found in this file.";
        downloadButton.disabled = true;
        return;
    }
    try {
        preview.textContent = convertPreview(session.transcript, readConfig(), PREVIEW_SEGMENTS);
        previewNote.textContent =
            total > PREVIEW_SEGMENTS
                ? `Showing the first ${PREVIEW_SEGMENTS} of ${total} segments.`
                : `Showing all ${total} segments.`;
        downloadButton.disabled = false;
    } catch (err) {
        preview.textContent = "";
        previewNote.textContent = `Cannot convert: ${err instanceof Error ? err.message : String(err)}`;
        downloadButton.disabled = true;
    }
}

function loadFile(file: File) {
    file.text().then((text) => {
        const result = parseExport(file.name, text);
        showDiagnostics(result.diagnostics);
        if (result.transcript === null) {
            session = null;
            el("file-info").textContent = `${file.name}: not loaded (fix the errors above and retry)`;
        } else {
            session = {
                fileName: file.name,
                transcript: result.transcript,
                warnings: result.diagnostics,
                speakerRows: new Map(
                    speakers(result.transcript).map((label) => [label, { action: "keep" as const, name: "" }]),
                ),
            };
            const n = result.transcript.segments.length;
            el("file-info").textContent = `${file.name}: ${n} segment${n === 1 ? "" : "s"}`;
        }
        renderSpeakerTable();
        refreshPreview();
    });
}

function downloadName(fileName: string): string {
    const stem = fileName.replace(/\.[^.]+$/, "");
    return `${stem || "transcript"}_converted.txt`;
}

function downloadResult() {
    if (!session) return;
    let text: string;
    try {
        text = convert(session.transcript, readConfig());
    } catch {
        refreshPreview();
        return;
    }
    const blob = new Blob([text], { type: "text/plain" });
    const url = URL.createObjectURL(blob);
    const anchor = document.createElement("a");
    anchor.href = url;
    anchor.download = downloadName(session.fileName);
    anchor.click();
    URL.revokeObjectURL(url);
}

export function init() {
    const dropZone = el("drop-zone");
    const fileInput = el<HTMLInputElement>("file-input");

    dropZone.addEventListener("click", () => fileInput.click());
    dropZone.addEventListener("dragover", (event) => {
        event.preventDefault();
        dropZone.classList.add("dragging");
    });
    dropZone.addEventListener("dragleave", () => dropZone.classList.remove("dragging"));
    dropZone.addEventListener("drop", (event) => {
        event.preventDefault();
        dropZone.classList.remove("dragging");
        const file = event.dataTransfer?.files?.[0];
        if (file) loadFile(file);
    });
    fileInput.addEventListener("change", () => {
        const file = fileInput.files?.[0];
        if (file) loadFile(file);
        fileInput.value = "";
    });

    for (const id of ["mode", "fps", "style", "eol", "keep-end"]) {
        el(id).addEventListener("change", refreshPreview);
        el(id).addEventListener("input", refreshPreview);
    }
    el("download").addEventListener("click", downloadResult);

    refreshPreview();
}

init();
