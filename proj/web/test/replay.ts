// Copyright 2026 The Parley Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Replays exchanges recorded from a live server (see
// scripts/record_web_fixture.py) as a fetch function.

import { readFileSync } from "node:fs";
import { fileURLToPath } from "node:url";

import type { FetchFn } from "../src/api.js";

export interface Exchange {
  method: string;
  path: string;
  body: unknown;
  status: number;
  response: unknown;
}

export const HERE = fileURLToPath(new URL(".", import.meta.url));
export const exchanges: Exchange[] = JSON.parse(readFileSync(HERE + "fixture.json", "utf8"));

export interface Call {
  method: string;
  path: string;
  body: unknown;
}

export interface Replay {
  fetch: FetchFn;
  calls: Call[];
}

function key(method: string, path: string, body: unknown): string {
  return `${method} ${path} ${body === undefined || body === null ? "" : JSON.stringify(body)}`;
}

// Requests are matched on method, path and body. Repeated GETs reuse the
// last recorded answer; an unrecorded request fails the test.
export function replay(): Replay {
  const queues = new Map<string, Exchange[]>();
  for (const e of exchanges) {
    const k = key(e.method, e.path, e.body);
    queues.set(k, [...(queues.get(k) ?? []), e]);
  }
  const used = new Map<string, number>();
  const calls: Call[] = [];
  const fetch: FetchFn = async (input, init) => {
    const method = init?.method ?? "GET";
    const body = init?.body === undefined ? undefined : JSON.parse(String(init.body));
    calls.push({ method, path: input, body });
    const k = key(method, input, body);
    const q = queues.get(k);
    if (!q) throw new Error(`unrecorded request: ${k}`);
    let n = used.get(k) ?? 0;
    if (n >= q.length) {
      if (method !== "GET") throw new Error(`request replayed too often: ${k}`);
      n = q.length - 1;
    }
    used.set(k, n + 1);
    const e = q[n];
    return new Response(JSON.stringify(e.response), {
      status: e.status,
      headers: { "Content-Type": "application/json" },
    });
  };
  return { fetch, calls };
}

export function recorded(method: string, path: string): Exchange[] {
  return exchanges.filter((e) => e.method === method && e.path === path);
}
