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

// Browser entry point: renders ViewState into the page and wires events.
// Text always goes in through textContent, so what is shown is exactly what
// the server sent.

import { Api } from "./api.js";
import { ChatClient, reportLines, type Bubble, type ViewState } from "./controller.js";

const $ = <T extends HTMLElement>(id: string) => document.getElementById(id) as T;

function userId(): string {
  let id = localStorage.getItem("parley.user");
  if (!id) {
    id = "guest-" + Math.random().toString(36).slice(2, 10);
    localStorage.setItem("parley.user", id);
  }
  return id;
}

const client = new ChatClient(new Api(""), userId());
let shown: Bubble[] = [];  // messages currently in the log

function bubble(b: Bubble, animate: boolean): HTMLElement {
  const row = document.createElement("div");
  row.className = `bubble ${b.speaker}` + (b.pending ? " pending" : "");
  const pic = document.createElement("span");
  pic.className = "pic";
  if (b.avatar) {
    const img = document.createElement("img");
    img.src = b.avatar;
    img.alt = "";
    pic.appendChild(img);
  }
  const text = document.createElement("p");
  text.className = "text";
  if (animate) {
    // cosmetic only; the node ends up holding the full text
    let i = 0;
    const step = () => {
      i = Math.min(b.text.length, i + 2);
      text.textContent = b.text.slice(0, i);
      if (i < b.text.length) setTimeout(step, 15);
    };
    step();
  } else {
    text.textContent = b.text;
  }
  row.append(pic, text);
  return row;
}

function renderGallery(s: ViewState): void {
  const list = $("personas");
  list.replaceChildren(
    ...s.personas.map((p) => {
      const card = document.createElement("button");
      card.className = "card";
      const img = document.createElement("img");
      img.src = `avatars/${p.avatar}`;
      img.alt = "";
      const name = document.createElement("strong");
      name.textContent = p.display_name;
      const desc = document.createElement("span");
      desc.textContent = p.description;
      card.append(img, name, desc);
      card.onclick = () => void client.startPersona(p.id);
      return card;
    }),
  );
}

function renderSession(s: ViewState): void {
  $("partner").textContent = s.partnerName;
  const log = $("messages");
  // keep the bubbles that are still the same objects, redraw the rest
  let k = 0;
  while (k < shown.length && k < s.messages.length && shown[k] === s.messages[k]) k++;
  while (log.childElementCount > k) log.lastElementChild?.remove();
  const live = shown.length > 0;
  for (let i = k; i < s.messages.length; i++) {
    const b = s.messages[i];
    log.appendChild(bubble(b, live && b.speaker === "partner" && i === s.messages.length - 1));
  }
  shown = s.messages;
  log.scrollTop = log.scrollHeight;

  const pick = $<HTMLSelectElement>("avatar");
  if (pick.options.length !== s.personas.length + 1) {
    pick.replaceChildren(new Option("Your picture", ""));
    for (const p of s.personas) pick.add(new Option(p.display_name, p.id));
  }
  pick.value = s.userAvatar ?? "";

  const input = $<HTMLInputElement>("input");
  input.disabled = s.closed;
  $<HTMLButtonElement>("send").disabled = !client.canSend(input.value);

  const panel = $("report");
  panel.hidden = s.report === null;
  if (s.report) {
    const [preamble, ...flagged] = reportLines(s.report);
    $("preamble").textContent = preamble;
    $("flagged").replaceChildren(
      ...flagged.map((line) => {
        const li = document.createElement("li");
        li.textContent = line;
        return li;
      }),
    );
  }
}

function render(s: ViewState): void {
  const banner = $("banner");
  banner.hidden = s.banner === null;
  banner.textContent = s.banner ?? "";
  $("gallery").hidden = s.screen !== "gallery";
  $("session").hidden = s.screen !== "session";
  if (s.screen === "gallery") renderGallery(s);
  else renderSession(s);
  if (s.sessionId && location.hash !== "#" + s.sessionId) history.replaceState(null, "", "#" + s.sessionId);
}

client.subscribe(render);

$("send-form").addEventListener("submit", (ev) => {
  ev.preventDefault();
  const input = $<HTMLInputElement>("input");
  const text = input.value;
  if (!client.canSend(text)) return;
  input.value = "";
  void client.send(text).then((sent) => {
    if (!sent && input.value === "") input.value = text;
  });
});
$("input").addEventListener("input", () => render(client.state));
$("avatar").addEventListener("change", (ev) => {
  const id = (ev.target as HTMLSelectElement).value;
  if (!id) return;
  localStorage.setItem("parley.avatar", id);
  void client.chooseAvatar(id);
});
$("interview").addEventListener("click", () => void client.startInterview("job-interview"));
$("back").addEventListener("click", () => {
  history.replaceState(null, "", location.pathname);
  shown = [];
  $("messages").replaceChildren();
  client.leave();
});

const resume = location.hash.slice(1);
if (resume) void client.restore(resume, localStorage.getItem("parley.avatar"));
else void client.loadGallery();
