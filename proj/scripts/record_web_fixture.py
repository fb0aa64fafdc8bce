#!/usr/bin/env python3
# Copyright 2026 The Parley Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Records web/test/fixture.json from a live `parley serve`.

Every request of the client tests is played here against the real server and
stored as {method, path, body, status, response}. The client tests replay the
exchanges in order, so any drift in the server output shows up there.

Usage: scripts/record_web_fixture.py [--cli path/to/parley] [--out file]
"""

import argparse
import json
import pathlib
import socket
import subprocess
import time
import urllib.error
import urllib.request

ROOT = pathlib.Path(__file__).resolve().parent.parent
CLOCK = "2026-10-14T15:00:00"


def free_port():
    with socket.socket() as s:
        s.bind(("127.0.0.1", 0))
        return s.getsockname()[1]


def interview_answers():
    lines = (ROOT / "corpus" / "interview" / "replay.setup").read_text().splitlines()
    return [l[2:] for l in lines if l.startswith("> ")]


class Recorder:
    def __init__(self, base):
        self.base = base
        self.exchanges = []

    def call(self, method, path, body=None):
        data = None if body is None else json.dumps(body).encode()
        req = urllib.request.Request(self.base + path, data=data, method=method)
        if data is not None:
            req.add_header("Content-Type", "application/json")
        try:
            with urllib.request.urlopen(req) as r:
                status, raw = r.status, r.read()
        except urllib.error.HTTPError as e:
            status, raw = e.code, e.read()
        response = json.loads(raw)
        self.exchanges.append(
            {"method": method, "path": path, "body": body, "status": status, "response": response}
        )
        return response


def record(rec):
    rec.call("GET", "/api/personas")

    # persona chat with an avatar chosen mid-session
    sid = rec.call("POST", "/api/sessions",
                   {"user_id": "yang", "mode": "persona", "persona_id": "emina",
                    "seed": 1, "clock": CLOCK})["session_id"]
    rec.call("POST", f"/api/sessions/{sid}/messages", {"text": "Hello."})
    rec.call("POST", f"/api/sessions/{sid}/profile", {"avatar": "christoph"})
    rec.call("POST", f"/api/sessions/{sid}/messages", {"text": "I like the Internet."})
    rec.call("POST", f"/api/sessions/{sid}/messages", {"text": "Because it is useful."})
    rec.call("GET", f"/api/sessions/{sid}/transcript")
    rec.call("GET", f"/api/sessions/{sid}/report")

    # the interview run to its report
    iid = rec.call("POST", "/api/sessions",
                   {"user_id": "petra", "mode": "scenario", "script_id": "job-interview",
                    "seed": 15, "clock": CLOCK})["session_id"]
    for answer in interview_answers():
        reply = rec.call("POST", f"/api/sessions/{iid}/messages", {"text": answer})
        if reply.get("kind") == "finished":
            break
    rec.call("GET", f"/api/sessions/{iid}/report")
    rec.call("GET", f"/api/sessions/{iid}/transcript")
    rec.call("POST", f"/api/sessions/{iid}/messages", {"text": "One more thing."})
    rec.call("GET", "/api/sessions/nope/transcript")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--cli", type=pathlib.Path, default=ROOT / "build" / "tools" / "parley")
    ap.add_argument("--out", type=pathlib.Path, default=ROOT / "web" / "test" / "fixture.json")
    args = ap.parse_args()
    port = free_port()
    proc = subprocess.Popen(
        [str(args.cli), "--data-dir", str(ROOT / "data"), "serve", "--host", "127.0.0.1",
         "--port", str(port)],
        stdout=subprocess.DEVNULL, stderr=subprocess.DEVNULL)
    try:
        base = f"http://127.0.0.1:{port}"
        for _ in range(100):
            try:
                urllib.request.urlopen(base + "/api/personas").read()
                break
            except OSError:
                time.sleep(0.05)
        rec = Recorder(base)
        record(rec)
    finally:
        proc.terminate()
        proc.wait()
    args.out.parent.mkdir(parents=True, exist_ok=True)
    args.out.write_text(json.dumps(rec.exchanges, indent=1, ensure_ascii=False) + "\n")
    print(f"{len(rec.exchanges)} exchanges written to {args.out}")


if __name__ == "__main__":
    main()
