"""Random parameter triples in each Lambda_pi, plus mixed-permutation triples.

    python3 scripts/theorem1_sweep.py --cases 10 --samples 100 --seed 0 [--out sweep.json]
"""

import argparse
import json
import sys
from dataclasses import asdict

from quadyb.construct import SweepConfig, theorem1_sweep


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--cases", type=int, default=10)
    ap.add_argument("--samples", type=int, default=100)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--bound", type=int, default=50)
    ap.add_argument("--out")
    args = ap.parse_args(argv)
    cfg = SweepConfig(args.cases, args.samples, args.seed, args.bound)
    res = theorem1_sweep(cfg)
    for c in res.cases:
        mark = "ok " if c.ok else "BAD"
        print(f"{mark} {'/'.join(c.perms):16s} expected={c.expected!s:5s} verdict={c.verdict}")
    print(f"{len(res.cases)} cases, {res.false_verdicts} false verdicts")
    if args.out:
        doc = {"config": asdict(cfg), "false_verdicts": res.false_verdicts,
               "cases": [asdict(c) for c in res.cases]}
        with open(args.out, "w") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True, default=str)
    return 0 if res.false_verdicts == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
