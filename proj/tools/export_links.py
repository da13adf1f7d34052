#!/usr/bin/env python3
"""Regenerate data/links/*.lnk from spherogram's link table.

Only needed when the bundled data has to be rebuilt; the build and the
tests read the frozen files.  Requires spherogram.
"""
import argparse
import os
import random
import sys

import spherogram

# (mirror, component reversal mask) chosen so the tabulated invariants
# line up with the reference tables where possible; see README.
ORIENTATION = {
    "L2a1": (False, 1), "L4a1": (False, 0), "L5a1": (False, 0),
    "L6a1": (False, 0), "L6a2": (False, 0), "L6a3": (False, 0),
    "L6a4": (False, 0), "L6a5": (False, 0), "L6n1": (False, 3),
    "L7a1": (False, 0), "L7a2": (False, 0), "L7a3": (False, 0),
    "L7a4": (False, 0), "L7a5": (False, 0), "L7a6": (False, 1),
    "L7a7": (False, 0), "L7n1": (False, 0), "L7n2": (False, 0),
}


def strand_ends(link):
    """(sign, under in, over in, under out, over out) per crossing."""
    out = []
    for c, t in zip(link.crossings, link.PD_code()):
        if (1, 3) in c.directions:
            oi, oo = t[1], t[3]
        else:
            oi, oo = t[3], t[1]
        out.append([c.sign, t[0], oi, t[2], oo])
    return out


def components(raw):
    parent = {}

    def find(a):
        parent.setdefault(a, a)
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for _, ui, oi, uo, oo in raw:
        parent[find(ui)] = find(uo)
        parent[find(oi)] = find(oo)
    ids = {}
    for label in sorted(parent):
        ids.setdefault(find(label), len(ids))
    return {label: ids[find(label)] for label in parent}


def reverse(raw, mask):
    comp = components(raw)
    res = []
    for s, ui, oi, uo, oo in raw:
        ru = mask >> comp[ui] & 1
        ro = mask >> comp[oi] & 1
        if ru:
            ui, uo = uo, ui
        if ro:
            oi, oo = oo, oi
        if ru != ro:
            s = -s
        res.append([s, ui, oi, uo, oo])
    return res


def to_native(name, raw):
    lines = [f"link {name}"]
    for s, ui, oi, uo, oo in raw:
        if s > 0:
            ports = (uo, oi, ui, oo)
            tok = "+"
        else:
            ports = (ui, oo, uo, oi)
            tok = "-"
        lines.append("crossing " + tok + " " + " ".join(str(p + 1) for p in ports))
    return "\n".join(lines) + "\n"


def reverse_bigon(raw):
    """Pairs of crossings whose over strand runs i->j while the under strand runs j->i."""
    return [(i, j) for i, a in enumerate(raw) for j, b in enumerate(raw)
            if i != j and a[4] == b[2] and b[3] == a[1]]


def hopf_with_reverse_bigon(seed):
    rng = random.Random(seed)
    for _ in range(1000):
        random.seed(rng.random())
        link = spherogram.Link("L2a1")
        link.backtrack(steps=1, prob_type_1=0.0, prob_type_2=1.0)
        raw = strand_ends(link)
        if len(raw) == 4 and reverse_bigon(raw):
            return raw
    raise RuntimeError("no reverse bigon found")


def variants():
    # a one-crossing kink has the same port pattern for either sign
    kink = [[0, 0, 1, 1, 0]]
    yield "unknot", "loop\n"
    yield "unknot_kink_pos", [[1] + kink[0][1:]]
    yield "unknot_kink_neg", [[-1] + kink[0][1:]]
    yield "hopf", strand_ends(spherogram.Link("L2a1"))
    yield "hopf_rii", hopf_with_reverse_bigon(3)
    yield "braid_rIII_a", strand_ends(spherogram.ClosedBraid([1, 2, 1, 1, 2]))
    yield "braid_rIII_b", strand_ends(spherogram.ClosedBraid([2, 1, 2, 1, 2]))


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--out", default=os.path.join(os.path.dirname(__file__), "..", "data", "links"))
    ap.add_argument("--variants", action="store_true",
                    help="write the Reidemeister variant pairs instead")
    ap.add_argument("names", nargs="*")
    args = ap.parse_args()
    if args.variants:
        for stem, raw in variants():
            text = f"link {stem}\n" + raw if isinstance(raw, str) else to_native(stem, raw)
            with open(os.path.join(args.out, stem + ".lnk"), "w") as f:
                f.write(text)
        return 0
    for name in args.names or sorted(ORIENTATION):
        mirrored, mask = ORIENTATION[name]
        link = spherogram.Link(name)
        if mirrored:
            link = link.mirror()
        raw = reverse(strand_ends(link), mask)
        with open(os.path.join(args.out, name + ".lnk"), "w") as f:
            f.write(to_native(name, raw))
    return 0


if __name__ == "__main__":
    sys.exit(main())
