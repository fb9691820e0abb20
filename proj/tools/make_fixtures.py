#!/usr/bin/env python3
"""Write reference PD codes for the table entries using spherogram's tables."""
import argparse
import json
import os

import spherogram


def write_pd(path, name, link):
    pd = [[a + 1 for a in x] for x in link.PD_code()]
    with open(path, "w", encoding="utf-8") as f:
        json.dump({"name": name, "components": len(link.link_components), "crossings": pd}, f)
        f.write("\n")


def write_pretzels(triples, outdir):
    """P(p,q,r) as the numerator closure of the sum of three vertical twists."""
    os.makedirs(outdir, exist_ok=True)
    for t in triples:
        labels = [int(x) for x in t.split(",")]
        tangles = [spherogram.RationalTangle(1 if x > 0 else -1, abs(x)) for x in labels]
        link = (tangles[0] + tangles[1] + tangles[2]).numerator_closure()
        name = "P_" + "_".join(str(x) for x in labels)
        write_pd(os.path.join(outdir, f"{name}.pd.json"), name, link)


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("table")
    ap.add_argument("outdir")
    ap.add_argument("--extra", nargs="*", default=["8_18"])
    ap.add_argument("--pretzels", nargs="*", default=["1,1,1", "3,3,3", "-2,3,5", "2,3,-3", "2,2,2", "3,-1,2"])
    args = ap.parse_args()
    names = [e["name"] for e in json.load(open(args.table, encoding="utf-8"))]
    names += [n for n in args.extra if n not in names]
    os.makedirs(args.outdir, exist_ok=True)
    missing = []
    for name in names:
        try:
            link = spherogram.Link(name)
        except Exception:
            missing.append(name)
            continue
        write_pd(os.path.join(args.outdir, f"{name}.pd.json"), name, link)
    write_pretzels(args.pretzels, os.path.join(os.path.dirname(os.path.normpath(args.outdir)), "pretzel"))
    print(f"wrote {len(names) - len(missing)} fixtures; missing: {' '.join(missing) or 'none'}")


if __name__ == "__main__":
    main()
