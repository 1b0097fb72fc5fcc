// Spawns the real backend over the fixture dataset: precompute once into a
// temp directory, then serve it for the duration of the test run.

import { spawn, spawnSync, ChildProcess } from "node:child_process";
import { mkdtempSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join, dirname } from "node:path";
import { fileURLToPath } from "node:url";

import { API_BASE } from "./serverInfo.js";

let server: ChildProcess | null = null;
let artifactDir = "";

async function waitForServer(timeoutMs: number): Promise<void> {
  const deadline = Date.now() + timeoutMs;
  let lastError: unknown = null;
  while (Date.now() < deadline) {
    try {
      const resp = await fetch(`${API_BASE}/datasets`);
      if (resp.ok) {
        return;
      }
    } catch (err) {
      lastError = err;
    }
    await new Promise((resolve) => setTimeout(resolve, 250));
  }
  throw new Error(`backend did not come up: ${lastError}`);
}

export async function setup(): Promise<void> {
  const here = dirname(fileURLToPath(import.meta.url));
  const manifest = join(here, "..", "fixture", "manifest.json");
  artifactDir = mkdtempSync(join(tmpdir(), "embfair-ui-"));

  const pre = spawnSync(
    "python3", ["-m", "embfair.cli", "precompute", manifest, "--out-dir", artifactDir],
    { encoding: "utf-8" },
  );
  if (pre.status !== 0) {
    throw new Error(`precompute failed: ${pre.stderr || pre.stdout}`);
  }

  const listen = API_BASE.replace("http://", "");
  server = spawn(
    "python3", ["-m", "embfair.cli", "serve", "--artifacts", artifactDir, "--listen", listen],
    { stdio: ["ignore", "pipe", "pipe"] },
  );
  await waitForServer(30_000);
}

export async function teardown(): Promise<void> {
  if (server && !server.killed) {
    server.kill("SIGTERM");
  }
  if (artifactDir) {
    rmSync(artifactDir, { recursive: true, force: true });
  }
}
