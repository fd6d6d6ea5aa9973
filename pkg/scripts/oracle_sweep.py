"""Compare ideal operations with the brute-force graded oracle on many random instances."""

import argparse
import random

from tiercert.corpus import oracle_instance


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--instances", type=int, default=1000)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-degree", type=int, default=4)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    bad = 0
    tally = {}
    for i in range(args.instances):
        res = oracle_instance(rng, max_degree=args.max_degree)
        for k, v in res.items():
            tally[k] = tally.get(k, 0) + bool(v)
        if not all(res.values()):
            bad += 1
            print(f"instance {i}: disagreement {res}")
    for k, v in tally.items():
        print(f"{k:<13} {v}/{args.instances}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
