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

// Typed client of the parley HTTP API. The fetch function is injectable so
// tests can replay recorded exchanges.

export interface Persona {
  id: string;
  display_name: string;
  pattern: string;
  description: string;
  avatar: string;
}

export type ReplyKind = "chat" | "question" | "finished";

export interface MessageReply {
  reply: string;
  kind: ReplyKind;
  report_id?: string;
  strategies?: string[];
}

export interface Span {
  begin: number;
  end: number;
  kind: string;
}

export interface FlaggedSentence {
  sentence: string;
  kinds: string[];
  spans: Span[];
}

export interface Report {
  preamble: string;
  flagged: FlaggedSentence[];
  metrics: Record<string, number>;
  text: string;
}

export interface Turn {
  index: number;
  speaker: "user" | "system";
  text: string;
  timestamp: string;
}

export interface Transcript {
  session_id: string;
  user_id: string;
  mode: "persona" | "scenario";
  closed: boolean;
  persona_id?: string;
  script_id?: string;
  turns: Turn[];
}

export interface Profile {
  user_id: string;
  display_name: string | null;
  avatar: string | null;
}

export interface SessionRequest {
  user_id: string;
  mode: "persona" | "scenario";
  persona_id?: string;
  script_id?: string;
  seed?: number;
  clock?: string;
}

export type FetchFn = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  constructor(
    readonly status: number,
    readonly code: string,
    message: string,
  ) {
    super(message);
    this.name = "ApiError";
  }
}

export class Api {
  constructor(
    private readonly base = "",
    private readonly fetchFn: FetchFn = (input, init) => fetch(input, init),
  ) {}

  personas(): Promise<Persona[]> {
    return this.call("GET", "/api/personas");
  }

  async createSession(req: SessionRequest): Promise<string> {
    const r = await this.call<{ session_id: string }>("POST", "/api/sessions", req);
    return r.session_id;
  }

  postMessage(sessionId: string, text: string): Promise<MessageReply> {
    return this.call("POST", `/api/sessions/${enc(sessionId)}/messages`, { text });
  }

  updateProfile(
    sessionId: string,
    update: { display_name?: string; avatar?: string },
  ): Promise<Profile> {
    return this.call("POST", `/api/sessions/${enc(sessionId)}/profile`, update);
  }

  report(sessionId: string): Promise<Report> {
    return this.call("GET", `/api/sessions/${enc(sessionId)}/report`);
  }

  transcript(sessionId: string): Promise<Transcript> {
    return this.call("GET", `/api/sessions/${enc(sessionId)}/transcript`);
  }

  private async call<T>(method: string, path: string, body?: unknown): Promise<T> {
    const init: RequestInit = { method };
    if (body !== undefined) {
      init.body = JSON.stringify(body);
      init.headers = { "Content-Type": "application/json" };
    }
    let res: Response;
    try {
      res = await this.fetchFn(this.base + path, init);
    } catch (e) {
      throw new ApiError(0, "Unreachable", e instanceof Error ? e.message : String(e));
    }
    let json: unknown;
    try {
      json = await res.json();
    } catch {
      throw new ApiError(res.status, "BadResponse", `${method} ${path}: response is not JSON`);
    }
    if (!res.ok) {
      const err = json as { error?: string; message?: string };
      throw new ApiError(res.status, err.error ?? "HttpError", err.message ?? `HTTP ${res.status}`);
    }
    return json as T;
  }
}

function enc(s: string): string {
  return encodeURIComponent(s);
}
