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

// Client state machine. Everything here is DOM-free; main.ts only renders
// the ViewState and forwards user actions.

import { Api, ApiError, type Persona, type Report, type Transcript } from "./api.js";

export interface Bubble {
  speaker: "user" | "partner";
  text: string;
  // image path, or null for the default user picture
  avatar: string | null;
  pending?: boolean;
}

export interface ViewState {
  screen: "gallery" | "session";
  personas: Persona[];
  banner: string | null;
  sessionId: string | null;
  mode: "persona" | "scenario" | null;
  partnerName: string;
  partnerAvatar: string | null;
  // persona id chosen as the user's picture
  userAvatar: string | null;
  messages: Bubble[];
  inFlight: boolean;
  closed: boolean;
  report: Report | null;
}

export interface StartOptions {
  seed?: number;
  clock?: string;
}

// The shipped interview script is held by Christoph.
const INTERVIEWER = "christoph";

export function initialState(): ViewState {
  return {
    screen: "gallery",
    personas: [],
    banner: null,
    sessionId: null,
    mode: null,
    partnerName: "",
    partnerAvatar: null,
    userAvatar: null,
    messages: [],
    inFlight: false,
    closed: false,
    report: null,
  };
}

export function avatarPath(file: string): string {
  return `avatars/${file}`;
}

export class ChatClient {
  private s: ViewState = initialState();
  private listeners: Array<(s: ViewState) => void> = [];

  constructor(
    private readonly api: Api,
    private readonly userId: string,
  ) {}

  get state(): ViewState {
    return this.s;
  }

  subscribe(fn: (s: ViewState) => void): () => void {
    this.listeners.push(fn);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== fn);
    };
  }

  async loadGallery(): Promise<void> {
    try {
      const personas = await this.api.personas();
      this.update({ personas, banner: null });
    } catch (e) {
      this.update({ banner: bannerFor(e) });
    }
  }

  async startPersona(personaId: string, opts: StartOptions = {}): Promise<void> {
    await this.ensurePersonas();
    await this.start({ user_id: this.userId, mode: "persona", persona_id: personaId, ...opts });
  }

  async startInterview(scriptId: string, opts: StartOptions = {}): Promise<void> {
    await this.ensurePersonas();
    await this.start({ user_id: this.userId, mode: "scenario", script_id: scriptId, ...opts });
  }

  canSend(text: string): boolean {
    return (
      this.s.screen === "session" &&
      this.s.sessionId !== null &&
      !this.s.inFlight &&
      !this.s.closed &&
      text.trim().length > 0
    );
  }

  // Resolves to false when nothing was sent.
  async send(text: string): Promise<boolean> {
    if (!this.canSend(text)) return false;
    const sid = this.s.sessionId as string;
    const mine: Bubble = { speaker: "user", text, avatar: this.userPicture(), pending: true };
    this.update({ messages: [...this.s.messages, mine], inFlight: true, banner: null });
    try {
      const r = await this.api.postMessage(sid, text);
      const messages = this.s.messages.map((b) =>
        b === mine ? { speaker: b.speaker, text: b.text, avatar: b.avatar } : b,
      );
      messages.push({ speaker: "partner", text: r.reply, avatar: this.s.partnerAvatar });
      this.update({ messages, inFlight: false });
      if (r.kind === "finished") {
        this.update({ closed: true });
        if (this.s.mode === "scenario") await this.fetchReport(sid);
      }
      return true;
    } catch (e) {
      const messages = this.s.messages.filter((b) => b !== mine);
      this.update({ messages, inFlight: false, banner: bannerFor(e) });
      if (e instanceof ApiError && e.code === "SessionClosed") {
        this.update({ closed: true });
        if (this.s.mode === "scenario") await this.fetchReport(sid);
      }
      return false;
    }
  }

  async chooseAvatar(personaId: string): Promise<void> {
    if (this.s.sessionId === null) return;
    try {
      const p = await this.api.updateProfile(this.s.sessionId, { avatar: personaId });
      this.update({ userAvatar: p.avatar });
      const pic = this.userPicture();
      this.update({
        messages: this.s.messages.map((b) => (b.speaker === "user" ? { ...b, avatar: pic } : b)),
      });
    } catch (e) {
      this.update({ banner: bannerFor(e) });
    }
  }

  // Rebuilds the view of an existing session, e.g. after a page reload.
  async restore(sessionId: string, userAvatar: string | null = null): Promise<void> {
    await this.ensurePersonas();
    let t: Transcript;
    try {
      t = await this.api.transcript(sessionId);
    } catch (e) {
      this.update({ banner: bannerFor(e) });
      return;
    }
    this.enterSession(t.session_id, t.mode, t.mode === "persona" ? t.persona_id : INTERVIEWER);
    this.update({ userAvatar, closed: t.closed });
    const user = this.userPicture();
    const messages: Bubble[] = t.turns.map((turn) =>
      turn.speaker === "user"
        ? { speaker: "user", text: turn.text, avatar: user }
        : { speaker: "partner", text: turn.text, avatar: this.s.partnerAvatar },
    );
    this.update({ messages });
    if (t.closed && t.mode === "scenario") await this.fetchReport(sessionId);
  }

  leave(): void {
    this.s = { ...initialState(), personas: this.s.personas };
    this.emit();
  }

  private async start(req: Parameters<Api["createSession"]>[0]): Promise<void> {
    try {
      const sid = await this.api.createSession(req);
      this.enterSession(sid, req.mode, req.mode === "persona" ? req.persona_id : INTERVIEWER);
    } catch (e) {
      this.update({ banner: bannerFor(e) });
    }
  }

  private enterSession(sessionId: string, mode: "persona" | "scenario", partner?: string): void {
    const p = this.s.personas.find((x) => x.id === partner);
    this.update({
      screen: "session",
      sessionId,
      mode,
      partnerName: p?.display_name ?? partner ?? "",
      partnerAvatar: p ? avatarPath(p.avatar) : null,
      messages: [],
      closed: false,
      report: null,
      banner: null,
      inFlight: false,
    });
  }

  private async fetchReport(sessionId: string): Promise<void> {
    try {
      this.update({ report: await this.api.report(sessionId) });
    } catch (e) {
      this.update({ banner: bannerFor(e) });
    }
  }

  private async ensurePersonas(): Promise<void> {
    if (this.s.personas.length === 0) await this.loadGallery();
  }

  private userPicture(): string | null {
    const p = this.s.personas.find((x) => x.id === this.s.userAvatar);
    return p ? avatarPath(p.avatar) : null;
  }

  private update(patch: Partial<ViewState>): void {
    this.s = { ...this.s, ...patch };
    this.emit();
  }

  private emit(): void {
    for (const l of this.listeners) l(this.s);
  }
}

export function bannerFor(e: unknown): string {
  if (e instanceof ApiError) {
    if (e.status === 0) return "The server cannot be reached. Please try again later.";
    if (e.code === "SessionClosed") return "This conversation has ended.";
    return e.message;
  }
  return String(e);
}

// Lines of the report panel, in display order. Sentences are kept verbatim.
export function reportLines(r: Report): string[] {
  return [r.preamble, ...r.flagged.map((f) => f.sentence)];
}
