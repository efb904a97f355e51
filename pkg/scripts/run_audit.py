#!/usr/bin/env python3
"""Run the empirical acylindricity audit for every separated pair of a
presentation, not just the first one the classifier picks.

Example:

    python3 scripts/run_audit.py fixtures/p4_racg.json --tree-radius 5 --element-radius 6
"""

import argparse
import json
import time

from arboreal.classify import build_splitting, separated_pairs
from arboreal.formats import load_presentation
from arboreal.tree import audit_acylindricity


def parse_args(argv):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("file", help="presentation JSON file")
    ap.add_argument("--k", type=int, default=3)
    ap.add_argument("--tree-radius", type=int, default=4)
    ap.add_argument("--element-radius", type=int, default=5)
    ap.add_argument("--local-radius", type=int, default=2)
    ap.add_argument("--ball-cap", type=int, default=200_000)
    return ap.parse_args(argv)


def main(argv=None):
    args = parse_args(argv)
    pres, _ = load_presentation(args.file)
    pairs = separated_pairs(pres)
    if not pairs:
        print("no separated pairs; nothing to audit")
        return 1

    all_ok = True
    for pair in pairs:
        splitting = build_splitting(pres, pair)
        started = time.time()
        report = audit_acylindricity(
            splitting,
            k=args.k,
            tree_radius=args.tree_radius,
            element_radius=args.element_radius,
            local_radius=args.local_radius,
            cap=args.ball_cap,
        )
        elapsed = time.time() - started
        status = "ok" if report.passed else "VIOLATION"
        print(
            f"pair ({pair.a}, {pair.b}): {status}  "
            f"max |stab| = {report.max_stabilizer_size} (bound {report.bound}), "
            f"{report.paths_checked} paths, {elapsed:.2f}s"
        )
        if not report.passed:
            all_ok = False
            print(json.dumps(report.to_dict(), indent=2))
    return 0 if all_ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
