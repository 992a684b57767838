#!/usr/bin/env python3
"""Print the strip-diagram walk table for an orientation sequence: each
admissible walk with its step records, endpoint profile, and eigenvalue
tuple, followed by the multiset of tuples and the squared-multiplicity sum
(which reproduces the endomorphism-algebra dimension 2^k k!).

Usage:
    python3 scripts/spectral_table.py --seq 1,-1 --m 2 --n 2 --delta 0
    python3 scripts/spectral_table.py --seq 1,1,-1 --m 3 --n 3 --delta 1
"""

import argparse
import sys
from collections import Counter

from wbcat.young4 import enumerate_Y, eigenvalue_tuple


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--seq", required=True,
                    help="comma-separated orientation sequence, e.g. 1,-1")
    ap.add_argument("--m", type=int, default=3)
    ap.add_argument("--n", type=int, default=3)
    ap.add_argument("--delta", type=int, default=0)
    args = ap.parse_args(argv)
    A = tuple(int(x) for x in args.seq.split(","))
    seqs = enumerate_Y(A, args.m, args.n, args.delta)
    print(f"A={A} m={args.m} n={args.n} delta={args.delta}: {len(seqs)} walks")
    tuples = []
    for s in seqs:
        ev = eigenvalue_tuple(s)
        tuples.append(tuple(ev))
        steps = "; ".join(f"{a} col {c} ({v})" for a, c, v in s.records())
        print(f"  end={s.diagrams[-1].b}  eig={tuple(str(e) for e in ev)}  [{steps}]")
    counts = Counter(tuples)
    print("eigenvalue tuple multiplicities:")
    for tup, c in sorted(counts.items()):
        print(f"  {tuple(str(e) for e in tup)}: {c}")
    print(f"sum of squared endpoint-section multiplicities: "
          f"{sum(c * c for c in Counter(s.diagrams[-1].b for s in seqs).values())}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
