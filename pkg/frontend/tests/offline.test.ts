/**
 * The page must work with the network unplugged: no external resources,
 * no network-capable APIs anywhere in the shipped sources.
 */

import { readFileSync, readdirSync } from "node:fs";
import { dirname, join } from "node:path";
import { fileURLToPath } from "node:url";

import { describe, expect, it } from "vitest";

const frontendDir = join(dirname(fileURLToPath(import.meta.url)), "..");

function sources(): Array<[string, string]> {
    const files: Array<[string, string]> = [["index.html", readFileSync(join(frontendDir, "index.html"), "utf8")]];
    for (const name of readdirSync(join(frontendDir, "src"))) {
        files.push([`src/${name}`, readFileSync(join(frontendDir, "src", name), "utf8")]);
    }
    return files;
}

describe("offline guarantee", () => {
    it("references no remote URLs", () => {
        for (const [name, text] of sources()) {
            expect(text.toLowerCase(), name).not.toContain("http://");
            expect(text.toLowerCase(), name).not.toContain("https://");
            expect(text.toLowerCase(), name).not.toContain("//cdn.");
        }
    });

    it("uses no network-capable APIs", () => {
        const forbidden = [
            "fetch(",
            "XMLHttpRequest",
            "WebSocket",
            "EventSource",
            "sendBeacon",
            "importScripts",
            "serviceWorker",
        ];
        for (const [name, text] of sources()) {
            for (const api of forbidden) {
                expect(text, `${name} must not use ${api}`).not.toContain(api);
            }
        }
    });

    it("loads scripts and styles only from within the page or its own dist/", () => {
        const html = readFileSync(join(frontendDir, "index.html"), "utf8");
        for (const match of html.matchAll(/(?:src|href)\s*=\s*"([^"]*)"/g)) {
            expect(match[1].startsWith("./") || match[1].startsWith("#"), `unexpected reference ${match[1]}`).toBe(
                true,
            );
        }
    });
});
