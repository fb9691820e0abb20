#!/usr/bin/env python3
"""Pull the knot/link representation table out of a markdown source into JSON."""
import argparse
import json
import re

NAME = re.compile(r"\$(?P<name>\d+(?:[_^]\{?\d+\}?)+)\$\s*&")
MATRIX = re.compile(r"\\begin\{smallmatrix\}(.*?)\\end\{smallmatrix\}", re.S)


def name_of(tex):
    # 3_1 -> 3_1, 8_{18} -> 8_18, 7^2_7 / 7_7^2 -> 7^2_7
    tex = tex.replace("{", "").replace("}", "")
    m = re.fullmatch(r"(\d+)(?:\^(\d+))?(?:_(\d+))?(?:\^(\d+))?", tex)
    if not m:
        raise ValueError(tex)
    n, sup1, sub, sup2 = m.groups()
    sup = sup1 or sup2
    return f"{n}^{sup}_{sub}" if sup else f"{n}_{sub}"


def rep_of(tex):
    tex = tex.strip()
    if tex.startswith("?"):
        return None
    m = MATRIX.search(tex)
    if m:
        rows = [r.split("&") for r in m.group(1).split("\\\\")]
        rows = [[x.strip().replace("-0", "0") for x in r] for r in rows if "".join(r).strip()]
        top, bottom = rows
        return f"[{' '.join(top)} / {' '.join(bottom)}]"
    m = re.search(r"\(([-\d,\s]+)\)", tex)
    if not m:
        raise ValueError(tex)
    return "(" + ",".join(x.strip() for x in m.group(1).split(",")) + ")"


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("source", help="markdown file containing the table")
    ap.add_argument("out")
    args = ap.parse_args()
    text = open(args.source, encoding="utf-8").read()
    body = text[text.index("\\begin{tabular}") : text.rindex("\\end{tabular}")]
    body = re.sub(r"\\(begin|end)\{tabular\}(\{c l\})?", "", body)
    marks = list(NAME.finditer(body))
    entries = []
    for i, m in enumerate(marks):
        end = marks[i + 1].start() if i + 1 < len(marks) else len(body)
        entries.append({"name": name_of(m.group("name")), "rep": rep_of(body[m.end() : end])})
    with open(args.out, "w", encoding="utf-8") as f:
        json.dump(entries, f, indent=1)
        f.write("\n")
    print(f"{len(entries)} entries")


if __name__ == "__main__":
    main()
