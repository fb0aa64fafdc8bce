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
"""Draws the placeholder persona pictures in web/avatars/ (stdlib only)."""

import pathlib
import struct
import zlib

ROOT = pathlib.Path(__file__).resolve().parent.parent
COLORS = {
    "christine": (214, 96, 77),
    "stephan": (88, 129, 87),
    "emina": (233, 171, 60),
    "christoph": (70, 110, 170),
    "ingrid": (140, 90, 160),
}
SIZE = 96


def png(rows):
    raw = b"".join(b"\x00" + bytes(r) for r in rows)

    def chunk(tag, data):
        c = tag + data
        return struct.pack(">I", len(data)) + c + struct.pack(">I", zlib.crc32(c) & 0xFFFFFFFF)

    head = struct.pack(">IIBBBBB", SIZE, SIZE, 8, 6, 0, 0, 0)
    return (b"\x89PNG\r\n\x1a\n" + chunk(b"IHDR", head) + chunk(b"IDAT", zlib.compress(raw, 9))
            + chunk(b"IEND", b""))


def draw(color):
    rows = []
    c = SIZE / 2
    for y in range(SIZE):
        row = []
        for x in range(SIZE):
            dx, dy = x + 0.5 - c, y + 0.5 - c
            d2 = dx * dx + dy * dy
            head = (dx * dx + (dy + 12) ** 2) < 18 ** 2
            body = dy > 14 and (dx * dx + (dy - 40) ** 2) < 34 ** 2
            if d2 > c * c:
                row += [0, 0, 0, 0]
            elif head or body:
                row += [250, 246, 238, 255]
            else:
                row += [*color, 255]
        rows.append(row)
    return png(rows)


def main():
    out = ROOT / "web" / "avatars"
    out.mkdir(parents=True, exist_ok=True)
    for name, color in COLORS.items():
        (out / f"{name}.png").write_bytes(draw(color))


if __name__ == "__main__":
    main()
