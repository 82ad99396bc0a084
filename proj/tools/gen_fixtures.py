#!/usr/bin/env python3
# Copyright 2026 The dpapprox Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates the synthetic benchmark fixtures under data/fixtures/.

Each contour is an analytic outline digitized into a closed 8-connected
chain. The scale parameter is searched so the chain has the point count of
the classic benchmark curve it stands in for. The bell image is a binary
silhouette written as plain PBM (y-down).
"""

import math
import pathlib
import sys

import numpy as np


def _cheb(a, b):
    return max(abs(a[0] - b[0]), abs(a[1] - b[1]))


def digitize(xy):
    """Rounds a densely sampled closed outline to a minimal closed 8-chain."""
    pts = [(int(round(x)), int(round(y))) for x, y in xy]
    out = []
    for p in pts:
        if out and out[-1] == p:
            continue
        if out and _cheb(out[-1], p) > 1:
            a = out[-1]
            steps = _cheb(a, p)
            for s in range(1, steps):
                q = (int(round(a[0] + (p[0] - a[0]) * s / steps)),
                     int(round(a[1] + (p[1] - a[1]) * s / steps)))
                if q != out[-1]:
                    out.append(q)
        out.append(p)
    while len(out) > 1 and out[-1] == out[0]:
        out.pop()
    changed = True
    while changed and len(out) > 3:
        changed = False
        i = 0
        while i < len(out) and len(out) > 3:
            n = len(out)
            a, b, c = out[(i - 1) % n], out[i], out[(i + 1) % n]
            if a == c:
                # spike: drop b and the duplicate that would follow
                del out[i]
                j = i % len(out)
                del out[j]
                changed = True
                continue
            if _cheb(a, c) == 1:
                del out[i]
                changed = True
                continue
            i += 1
    n = len(out)
    for i in range(n):
        assert _cheb(out[i], out[(i + 1) % n]) == 1, (out[i], out[(i + 1) % n])
    return out


def signed_area(pts):
    s = 0.0
    n = len(pts)
    for i in range(n):
        x0, y0 = pts[i]
        x1, y1 = pts[(i + 1) % n]
        s += x0 * y1 - x1 * y0
    return s / 2.0


def clockwise(pts):
    if signed_area(pts) > 0:
        pts = [pts[0]] + pts[:0:-1]
    return pts


def fit_count(outline, target, lo, hi, samples=1500):
    """Finds a scale whose digitization has exactly `target` points."""
    # The sub-pixel offset breaks the lattice symmetry of symmetric outlines,
    # which otherwise only digitize to multiples of four points.
    offset = np.array([0.37, 0.21])
    for scale in np.linspace(lo, hi, 500):
        pts = digitize(outline(scale, samples) + offset)
        if len(pts) == target:
            return pts
    raise RuntimeError(f"no scale in [{lo}, {hi}] gives n={target}")


def chromosome(scale, samples):
    # Bent rod with a pinched waist and round caps.
    a, radius = 0.75, 2.2
    u = np.linspace(-a, a, samples)
    cx = radius * np.sin(u)
    cy = radius * (1.0 - np.cos(u))
    tx, ty = np.cos(u), np.sin(u)
    nx, ny = -ty, tx
    w = 0.32 * (1.0 - 0.35 * np.exp(-(u / 0.18) ** 2))
    left = np.stack([cx + w * nx, cy + w * ny], axis=1)
    right = np.stack([cx - w * nx, cy - w * ny], axis=1)[::-1]
    th = np.linspace(0.0, math.pi, samples // 4)
    end = np.stack([cx[-1] + w[-1] * (nx[-1] * np.cos(th) + tx[-1] * np.sin(th)),
                    cy[-1] + w[-1] * (ny[-1] * np.cos(th) + ty[-1] * np.sin(th))], axis=1)
    start = np.stack([cx[0] - w[0] * (nx[0] * np.cos(th) + tx[0] * np.sin(th)),
                      cy[0] - w[0] * (ny[0] * np.cos(th) + ty[0] * np.sin(th))], axis=1)
    pts = np.concatenate([left, end, right, start]) * scale
    return pts


def leaf(scale, samples):
    # Pointed leaf with serrated margin and a short stem notch.
    t = np.linspace(0.0, 2 * math.pi, samples, endpoint=False)
    x = np.cos(t)
    y = 0.5 * np.sin(t) * (1.0 - 0.25 * np.cos(t)) * np.abs(np.sin(t / 2.0 + 0.35)) ** 0.3
    r = 1.0 + 0.05 * np.sin(14 * t)
    return np.stack([x * r, y * r], axis=1) * scale


def semicircle(scale, samples):
    # Outline built from semicircular arcs: a large cap on top, two bumps
    # on the right flank and a notch in the flat base.
    parts = []
    R = 1.0
    k = samples // 6
    th = np.linspace(math.pi, 0.0, k)
    parts.append(np.stack([R * np.cos(th), 1.0 + R * np.sin(th)], axis=1))
    for c in (0.75, 0.25):
        th = np.linspace(math.pi / 2, -math.pi / 2, k)
        parts.append(np.stack([R + 0.25 * np.cos(th), c + 0.25 * np.sin(th)], axis=1))
    parts.append(np.linspace([R, 0.0], [0.35, 0.0], k))
    th = np.linspace(0.0, math.pi, k)
    parts.append(np.stack([0.35 * np.cos(th), 0.35 * np.sin(th)], axis=1))
    parts.append(np.linspace([-0.35, 0.0], [-R, 0.0], k))
    parts.append(np.linspace([-R, 0.0], [-R, 1.0], k))
    return np.concatenate(parts) * scale


def infinity(scale, samples):
    # Lemniscate of Bernoulli; crosses itself at the origin.
    t = np.linspace(0.0, 2 * math.pi, samples, endpoint=False)
    d = 1.0 + np.sin(t) ** 2
    return np.stack([np.cos(t) / d, np.sin(t) * np.cos(t) / d], axis=1) * scale


def bell_image(width=118, height=124):
    img = np.zeros((height, width), dtype=np.uint8)
    cx = (width - 1) / 2.0
    top, base = 20.0, 116.0
    for row in range(height):
        for col in range(width):
            x = col - cx
            y = row
            # knob on top
            if (x / 9.0) ** 2 + ((y - 14.0) / 8.0) ** 2 <= 1.0:
                img[row, col] = 1
                continue
            if top <= y <= base:
                s = (y - top) / (base - top)
                half = 18.0 + 10.0 * math.sqrt(s) + 28.0 * s ** 4
                if s < 0.08:
                    half *= math.sqrt(max(0.0, 1.0 - ((0.08 - s) / 0.08) ** 2)) * 0.5 + 0.5
                if abs(x) <= half:
                    img[row, col] = 1
    return img


def write_curve(path, pts, note):
    with open(path, "w") as f:
        f.write(f"# {note}\n")
        f.write("closed\n")
        for x, y in pts:
            f.write(f"{x} {y}\n")


def write_pbm(path, img, note):
    h, w = img.shape
    with open(path, "w") as f:
        f.write(f"P1\n# {note}\n{w} {h}\n")
        for row in img:
            f.write("".join("1" if v else "0" for v in row) + "\n")


def main(outdir):
    out = pathlib.Path(outdir)
    out.mkdir(parents=True, exist_ok=True)
    specs = [
        ("chromosome", chromosome, 60, 5.0, 20.0),
        ("leaf", leaf, 120, 10.0, 40.0),
        ("semicircle", semicircle, 102, 5.0, 30.0),
        ("infinity", infinity, 45, 8.0, 14.0),
    ]
    for name, fn, n, lo, hi in specs:
        pts = clockwise(fit_count(fn, n, lo, hi))
        x0 = min(p[0] for p in pts)
        y0 = min(p[1] for p in pts)
        pts = [(x - x0, y - y0) for x, y in pts]
        write_curve(out / f"{name}.txt", pts,
                    f"synthetic {name}-class contour, n={n}; see README.md")
    write_pbm(out / "bell-7.pbm", bell_image(),
              "synthetic bell-class silhouette; see README.md")
    square = [(0, 0), (0, 1), (0, 2), (1, 2), (2, 2), (2, 1), (2, 0), (1, 0)]
    write_curve(out / "square.txt", square, "side-2 square ring")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else
         pathlib.Path(__file__).resolve().parent.parent / "data" / "fixtures")
