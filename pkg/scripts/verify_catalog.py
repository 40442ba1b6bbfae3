"""Symbolic YB / reversibility / involutivity table for every catalogued map."""

import sys
import time

from quadyb.catalog import FamilyId, make_family
from quadyb.engine import involution_check, reversibility_check, yb_check_symbolic


def main() -> int:
    print(f"{'map':10s} {'yb':6s} {'rev':6s} {'inv':6s} seconds")
    for f in FamilyId:
        m = make_family(f.value)
        t = time.perf_counter()
        row = [c(m).verdict for c in (yb_check_symbolic, reversibility_check, involution_check)]
        print(f"{f.value:10s} " + " ".join(f"{str(v):6s}" for v in row) + f" {time.perf_counter() - t:.1f}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
