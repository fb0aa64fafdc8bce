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

import { readFileSync } from "node:fs";

import { describe, expect, it } from "vitest";

import { Api, ApiError, type FetchFn, type MessageReply, type Persona, type Report } from "../src/api.js";
import { ChatClient, reportLines } from "../src/controller.js";
import { HERE, recorded, replay } from "./replay.js";

const CLOCK = "2026-10-14T15:00:00";
const CORPUS = HERE + "../../corpus/";

function interviewAnswers(): string[] {
  return readFileSync(CORPUS + "interview/replay.setup", "utf8")
    .split("\n")
    .filter((l) => l.startsWith("> "))
    .map((l) => l.slice(2));
}

function publishedFlags(): string[] {
  return readFileSync(CORPUS + "published/interview_flags.txt", "utf8")
    .split("\n")
    .filter((l) => l.length > 0);
}

function client(fetchFn: FetchFn, user = "yang"): ChatClient {
  return new ChatClient(new Api("", fetchFn), user);
}

async function eminaChat(c: ChatClient): Promise<void> {
  await c.startPersona("emina", { seed: 1, clock: CLOCK });
  await c.send("Hello.");
  await c.chooseAvatar("christoph");
  await c.send("I like the Internet.");
  await c.send("Because it is useful.");
}

async function interview(c: ChatClient): Promise<void> {
  await c.startInterview("job-interview", { seed: 15, clock: CLOCK });
  for (const a of interviewAnswers()) {
    if (c.state.closed) break;
    expect(await c.send(a)).toBe(true);
  }
}

describe("api client", () => {
  it("maps error bodies to ApiError", async () => {
    const api = new Api("", replay().fetch);
    const err = await api.transcript("nope").catch((e: unknown) => e);
    expect(err).toBeInstanceOf(ApiError);
    expect((err as ApiError).status).toBe(404);
    expect((err as ApiError).code).toBe("UnknownSession");
  });

  it("sends JSON bodies to the documented paths", async () => {
    const r = replay();
    const api = new Api("", r.fetch);
    expect(await api.createSession({ user_id: "yang", mode: "persona", persona_id: "emina", seed: 1, clock: CLOCK })).toBe("s1");
    await api.postMessage("s1", "Hello.");
    expect(r.calls.map((c) => `${c.method} ${c.path}`)).toEqual([
      "POST /api/sessions",
      "POST /api/sessions/s1/messages",
    ]);
    expect(r.calls[1].body).toEqual({ text: "Hello." });
  });

  it("reports an unreachable server with status 0", async () => {
    const api = new Api("", async () => {
      throw new TypeError("connection refused");
    });
    const err = (await api.personas().catch((e: unknown) => e)) as ApiError;
    expect(err.status).toBe(0);
  });
});

describe("persona gallery", () => {
  it("lists the five personas with their pictures", async () => {
    const c = client(replay().fetch);
    await c.loadGallery();
    const personas = recorded("GET", "/api/personas")[0].response as Persona[];
    expect(c.state.screen).toBe("gallery");
    expect(c.state.personas.map((p) => p.id)).toEqual(["christine", "stephan", "emina", "christoph", "ingrid"]);
    expect(c.state.personas).toEqual(personas);
    for (const p of c.state.personas) {
      expect(p.avatar).toBe(`${p.id}.png`);
      expect(readFileSync(HERE + "../avatars/" + p.avatar).subarray(1, 4).toString()).toBe("PNG");
    }
  });

  it("shows a banner instead of failing when the server is down", async () => {
    const c = client(async () => {
      throw new TypeError("fetch failed");
    });
    await c.loadGallery();
    expect(c.state.screen).toBe("gallery");
    expect(c.state.personas).toEqual([]);
    expect(c.state.banner).toMatch(/cannot be reached/);
  });
});

describe("persona conversation", () => {
  it("opens a session for the chosen persona", async () => {
    const r = replay();
    const c = client(r.fetch);
    await c.startPersona("emina", { seed: 1, clock: CLOCK });
    expect(c.state.screen).toBe("session");
    expect(c.state.sessionId).toBe("s1");
    expect(c.state.partnerName).toBe("Emina");
    expect(c.state.partnerAvatar).toBe("avatars/emina.png");
    expect(r.calls.find((x) => x.method === "POST")?.body).toEqual({
      user_id: "yang", mode: "persona", persona_id: "emina", seed: 1, clock: CLOCK,
    });
  });

  it("shows replies exactly as the server sent them", async () => {
    const c = client(replay().fetch);
    await eminaChat(c);
    const replies = recorded("POST", "/api/sessions/s1/messages").map((e) => (e.response as MessageReply).reply);
    const partner = c.state.messages.filter((b) => b.speaker === "partner").map((b) => b.text);
    expect(partner).toEqual(replies);
    expect(partner[1]).toBe("Oh, you like the Internet. Why do you like the Internet?");
    expect(c.state.messages.filter((b) => b.speaker === "user").map((b) => b.text)).toEqual([
      "Hello.", "I like the Internet.", "Because it is useful.",
    ]);
    expect(c.state.messages.every((b) => !b.pending)).toBe(true);
  });

  it("refuses empty input without a request", async () => {
    const r = replay();
    const c = client(r.fetch);
    await c.startPersona("emina", { seed: 1, clock: CLOCK });
    const before = r.calls.length;
    for (const text of ["", " ", "\t\n"]) {
      expect(c.canSend(text)).toBe(false);
      expect(await c.send(text)).toBe(false);
    }
    expect(r.calls.length).toBe(before);
    expect(c.state.messages).toEqual([]);
  });

  it("allows one message in flight", async () => {
    const r = replay();
    let release: () => void = () => {};
    const gate = new Promise<void>((res) => (release = res));
    const slow: FetchFn = async (input, init) => {
      if (init?.method === "POST" && input.endsWith("/messages")) await gate;
      return r.fetch(input, init);
    };
    const c = client(slow);
    await c.startPersona("emina", { seed: 1, clock: CLOCK });
    const first = c.send("Hello.");
    expect(c.state.inFlight).toBe(true);
    expect(c.state.messages).toEqual([{ speaker: "user", text: "Hello.", avatar: null, pending: true }]);
    expect(c.canSend("I like the Internet.")).toBe(false);
    expect(await c.send("I like the Internet.")).toBe(false);
    release();
    expect(await first).toBe(true);
    expect(c.state.inFlight).toBe(false);
    expect(c.canSend("I like the Internet.")).toBe(true);
    expect(r.calls.filter((x) => x.path.endsWith("/messages")).length).toBe(1);
  });

  it("uses the chosen avatar for every user message", async () => {
    const r = replay();
    const c = client(r.fetch);
    await eminaChat(c);
    expect(r.calls.find((x) => x.path.endsWith("/profile"))?.body).toEqual({ avatar: "christoph" });
    expect(c.state.userAvatar).toBe("christoph");
    for (const b of c.state.messages) {
      expect(b.avatar).toBe(b.speaker === "user" ? "avatars/christoph.png" : "avatars/emina.png");
    }
  });

  it("has no report for a persona chat", async () => {
    const c = client(replay().fetch);
    await eminaChat(c);
    expect(c.state.report).toBeNull();
    expect(c.state.closed).toBe(false);
  });
});

describe("interview", () => {
  it("asks only the script questions and ends with the report", async () => {
    const c = client(replay().fetch, "petra");
    await interview(c);
    expect(c.state.partnerName).toBe("Christoph");
    expect(c.state.closed).toBe(true);
    const partner = c.state.messages.filter((b) => b.speaker === "partner").map((b) => b.text);
    expect(partner[0]).toBe("Good day! What university do you attend?");
    const report = c.state.report as Report;
    expect(partner[partner.length - 1]).toBe(report.text.replace(/\n$/, ""));
    expect(c.canSend("hello")).toBe(false);
  });

  it("lists the flagged sentences verbatim", async () => {
    const c = client(replay().fetch, "petra");
    await interview(c);
    const report = c.state.report as Report;
    const answers = interviewAnswers();
    expect(reportLines(report)).toEqual([report.preamble, ...report.flagged.map((f) => f.sentence)]);
    expect(report.flagged.map((f) => f.sentence)).toEqual(publishedFlags());
    for (const f of report.flagged) expect(answers).toContain(f.sentence);
  });

  it("turns a closed-session error into the ended view", async () => {
    const r = replay();
    const c = client(r.fetch, "petra");
    await c.startInterview("job-interview", { seed: 15, clock: CLOCK });
    // the client has not seen the end, the server has
    expect(await c.send("One more thing.")).toBe(false);
    expect(c.state.banner).toBe("This conversation has ended.");
    expect(c.state.closed).toBe(true);
    expect(c.state.messages).toEqual([]);
    expect(c.state.report?.flagged.length).toBe(4);
  });
});

describe("reload", () => {
  it("rebuilds a persona chat from the transcript", async () => {
    const live = client(replay().fetch);
    await eminaChat(live);
    const again = client(replay().fetch);
    await again.restore("s1", "christoph");
    expect(again.state.messages).toEqual(live.state.messages);
    expect(again.state.partnerName).toBe(live.state.partnerName);
    expect(again.state.closed).toBe(false);
  });

  it("rebuilds a finished interview with its report", async () => {
    const live = client(replay().fetch, "petra");
    await interview(live);
    const again = client(replay().fetch, "petra");
    await again.restore("s2");
    expect(again.state.messages).toEqual(live.state.messages);
    expect(again.state.report).toEqual(live.state.report);
    expect(again.state.closed).toBe(true);
  });

  it("reports an unknown session", async () => {
    const c = client(replay().fetch);
    await c.restore("nope");
    expect(c.state.screen).toBe("gallery");
    expect(c.state.banner).toBe("unknown session 'nope'");
  });
});
