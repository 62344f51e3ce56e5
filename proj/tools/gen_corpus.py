#!/usr/bin/env python3
# Copyright 2026 The xlang Authors
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
"""Writes the grid-based corpus instances (oil, nested-grids).

Each grid cell is one atom; beliefs say exactly one cell holds. Outer images
are the smallest unions of target cells covering the source cells.

    python3 tools/gen_corpus.py corpus
"""

import argparse
import itertools
import pathlib
from fractions import Fraction

HEADER = "# Generated by tools/gen_corpus.py; edit the script, not this file.\n"


def exactly_one(atoms):
    lines = [f"believe: !({a} & {b})" for a, b in itertools.combinations(atoms, 2)]
    lines.append("believe: " + " | ".join(atoms))
    return lines


def language(name, atoms, extra=()):
    out = [HEADER.rstrip(), f"language {name}", "atoms: " + " ".join(atoms)]
    out += exactly_one(atoms)
    out += [f"believe: {b}" for b in extra]
    return "\n".join(out) + "\n"


def overlaps(a, b):
    # Half-open intervals; None bounds mean unbounded below.
    bounds = [x for x in (a[0], b[0]) if x is not None]
    lo = max(bounds) if bounds else None
    hi = min(a[1], b[1])
    return lo is None or lo < hi


def contains(outer, inner):
    lo_ok = outer[0] is None or (inner[0] is not None and outer[0] <= inner[0])
    return lo_ok and inner[1] <= outer[1]


def cover(source_cells, target_cells):
    """Target cells overlapping the union of source cells, or None when the
    target cells cannot cover it."""
    picked = []
    for name, iv in target_cells:
        if any(overlaps(iv, s) for s in source_cells):
            picked.append(name)
    # Every point of the source must lie in a target cell.
    for s in source_cells:
        pieces = sorted((iv for _, iv in target_cells if overlaps(iv, s)), key=lambda iv: (iv[0] is not None, iv[0]))
        lo = s[0]
        for iv in pieces:
            if lo is None:
                if iv[0] is not None:
                    return None
            elif iv[0] is not None and iv[0] > lo:
                return None
            lo = iv[1]
        if lo is None or lo < s[1]:
            return None
    return picked


def translation(cells1, cells2):
    lines = [HEADER.rstrip()]
    for src, dst, tag in ((cells1, cells2, "1>2"), (cells2, cells1, "2>1")):
        for name, iv in src:
            img = cover([iv], dst)
            lines.append(f"outer {tag}: {name} => " + ("*" if img is None else " | ".join(img)))
    return "\n".join(lines) + "\n"


def implication(cells1, cells2, lang1, lang2):
    """One seed per nonzero proposition: it implies its cover."""
    lines = [HEADER.rstrip()]
    for src, dst, a, b in ((cells1, cells2, lang1, lang2), (cells2, cells1, lang2, lang1)):
        for r in range(1, len(src) + 1):
            for combo in itertools.combinations(src, r):
                img = cover([iv for _, iv in combo], dst)
                if img is None:
                    continue
                lhs = " | ".join(n for n, _ in combo)
                lines.append(f"imp: {a}.{lhs} => {b}." + " | ".join(img))
    return "\n".join(lines) + "\n"


def write(dirpath, files):
    dirpath.mkdir(parents=True, exist_ok=True)
    for name, text in files.items():
        (dirpath / name).write_text(text)


def oil(root):
    # Dollar cells of $10 on [0,120); yuan cells of 100 yuan on [0,800) plus
    # one cell for negative prices. 100 yuan are worth exactly $15.
    dollars = [(f"lam_{10 * k}_{10 * k + 10}", (Fraction(10 * k), Fraction(10 * k + 10))) for k in range(12)]
    yuan = [("eta_neg", (None, Fraction(0)))]
    yuan += [(f"eta_{100 * k}_{100 * k + 100}", (Fraction(15 * k), Fraction(15 * k + 15))) for k in range(8)]
    atoms1 = ["lam_neg"] + [n for n, _ in dollars]
    write(root / "oil", {
        "lang1.lang": language("dollars", atoms1, extra=["!lam_neg"]),
        "lang2.lang": language("yuan", [n for n, _ in yuan]),
        "translation.tr": translation(dollars, yuan),
        "implication.imp": implication(dollars, yuan, "dollars", "yuan"),
    })


def nested(root):
    coarse = [(f"c_{30 * k}_{30 * k + 30}", (Fraction(30 * k), Fraction(30 * k + 30))) for k in range(4)]
    fine = [(f"f_{10 * k}_{10 * k + 10}", (Fraction(10 * k), Fraction(10 * k + 10))) for k in range(12)]
    write(root / "nested-grids", {
        "lang1.lang": language("coarse", [n for n, _ in coarse]),
        "lang2.lang": language("fine", [n for n, _ in fine]),
        "translation.tr": translation(coarse, fine),
    })


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("root", type=pathlib.Path)
    args = parser.parse_args()
    oil(args.root)
    nested(args.root)


if __name__ == "__main__":
    main()
