#!/usr/bin/env python3
"""Convert the flat dump written by export_chevie.g into WCT/SPI data files.

Usage: convert_chevie.py chevie_dump.txt <data dir>

Simple-root numbering is converted to Bourbaki numbering:
  * E_n, A_n: CHEVIE already uses Bourbaki numbering.
  * D_n: CHEVIE puts nodes 1,2 on the fork and 3..n along the arm; Bourbaki
    puts n-1,n on the fork and n-2..1 along the arm.
  * G_2: CHEVIE node 1 is long, Bourbaki node 1 is short.

Irreducible labels are written as dim_b, with primes appended (in CHEVIE
order) when several characters share (dim, b).
"""

import ast
import re
import sys
from collections import defaultdict
from pathlib import Path


def read_records(path):
    records = []
    current = None
    depth = 0
    for raw in Path(path).read_text().splitlines():
        line = raw.rstrip()
        if current is None:
            if re.match(r"^[TCIS]\|", line) or line == "END":
                current = line
            else:
                continue
        else:
            current += " " + line.strip()
        current = current.replace("\\ ", "")
        if current.endswith("\\"):
            current = current[:-1]
            continue
        depth = current.count("[") - current.count("]")
        if depth == 0:
            records.append(current)
            current = None
    return records


def split_types(records):
    types = []
    for rec in records:
        if rec == "END":
            continue
        kind, rest = rec[0], rec[2:]
        if kind == "T":
            name, order, cartan = rest.split("|", 2)
            types.append({"name": name, "order": int(order),
                          "cartan": ast.literal_eval(cartan),
                          "classes": [], "irreps": [], "springer": defaultdict(list)})
        elif kind == "C":
            name, size, order, word = rest.split("|")
            types[-1]["classes"].append((name, int(size), int(order),
                                         ast.literal_eval(word)))
        elif kind == "I":
            name, dim, b, row = rest.split("|")
            types[-1]["irreps"].append((name, int(dim), int(b),
                                        ast.literal_eval(row)))
        elif kind == "S":
            p, cname, idx, dim_bu = rest.split("|")
            types[-1]["springer"][int(p)].append((cname, int(idx), int(dim_bu)))
    return types


def index_map(name):
    family, rank = name[0], int(name[1:])
    if family == "D":
        def f(c):
            if c == 1:
                return rank - 1
            if c == 2:
                return rank
            return rank + 1 - c
        return f
    if family == "G":
        return lambda c: 3 - c
    return lambda c: c


def chevie_label(name):
    m = re.fullmatch(r"phi\{(\d+),(\d+)\}('*)", name)
    return (int(m.group(1)), int(m.group(2)), m.group(3)) if m else None


def make_labels(t):
    irreps = t["irreps"]
    parsed = [chevie_label(n) for n in (i[0] for i in irreps)]
    if all(parsed):
        for (name, dim, b, _), (d, bb, _) in zip(irreps, parsed):
            assert (d, bb) == (dim, b), name
        labels = ["%d_%d%s" % p for p in parsed]
    else:
        groups = defaultdict(list)
        for k, (_, dim, b, _) in enumerate(irreps):
            groups[(dim, b)].append(k)
        labels = [None] * len(irreps)
        for (dim, b), ks in groups.items():
            for m, k in enumerate(ks):
                mark = "'" * (m + 1) if len(ks) > 1 else ""
                labels[k] = "%d_%d%s" % (dim, b, mark)
    assert len(set(labels)) == len(labels)
    return labels


def clean_class_name(name):
    return name.replace("\\tilde ", "~").replace(" ", "")


def write_wct(t, labels, out):
    fmap = index_map(t["name"])
    lines = ["# Character table of W(%s)." % t["name"],
             "# Source: CHEVIE (GAP3) tables, converted by tools/data/convert_chevie.py.",
             "# Words use Bourbaki numbering of the simple reflections.",
             "WCT 1", "TYPE %s" % t["name"], "ORDER %d" % t["order"],
             "CLASSES %d" % len(t["classes"])]
    for name, size, order, word in t["classes"]:
        w = " ".join(str(fmap(c)) for c in word)
        lines.append(("C %s %d %d %s" % (clean_class_name(name), size, order, w)).rstrip())
    for label, (_, _, _, row) in zip(labels, t["irreps"]):
        lines.append("I %s %s" % (label, " ".join(str(v) for v in row)))
    out.write_text("\n".join(lines) + "\n")


def write_spi(t, labels, p, entries, out):
    lines = ["# Springer correspondence image (trivial local systems) for %s in characteristic %d." % (t["name"], p),
             "# Source: CHEVIE (GAP3) UnipotentClasses, converted by tools/data/convert_chevie.py.",
             "SPI 1", "TYPE %s" % t["name"], "CHAR %d" % p, "COUNT %d" % len(entries)]
    for cname, idx, dim_bu in entries:
        # trivial local systems are exactly those with b = dim B_u
        assert t["irreps"][idx - 1][2] == dim_bu, (t["name"], p, cname)
        lines.append("%s %s" % (labels[idx - 1], cname.replace(" ", "").replace("{+}", "+")))
    out.write_text("\n".join(lines) + "\n")


def main():
    dump, data = sys.argv[1], Path(sys.argv[2])
    (data / "tables").mkdir(parents=True, exist_ok=True)
    (data / "springer").mkdir(parents=True, exist_ok=True)
    for t in split_types(read_records(dump)):
        labels = make_labels(t)
        write_wct(t, labels, data / "tables" / ("%s.wct" % t["name"]))
        for p, entries in sorted(t["springer"].items()):
            write_spi(t, labels, p, entries, data / "springer" / ("%s_%d.spi" % (t["name"], p)))
        print(t["name"], len(t["classes"]), {p: len(e) for p, e in t["springer"].items()})


if __name__ == "__main__":
    main()
