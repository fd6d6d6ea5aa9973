"""Run the mutation drill over many seeds and report catch rates per mutation kind."""

import argparse
from collections import Counter

from tiercert.certificate.drill import run_drill
from tiercert.corpus import build_certificates
from tiercert.tier_builder import BuilderConfig


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, default=20)
    ap.add_argument("--per-cert", type=int, default=10)
    args = ap.parse_args()
    run = build_certificates(BuilderConfig())
    seen, caught = Counter(), Counter()
    missed = []
    for name, c in run.certificates.items():
        for seed in range(args.seeds):
            for o in run_drill(c, seed=seed, count=args.per_cert):
                seen[o.mutation.kind] += 1
                if o.caught:
                    caught[o.mutation.kind] += 1
                else:
                    missed.append((name, seed, o.mutation, o.failure_paths))
    for kind in sorted(seen):
        print(f"{kind:<13} {caught[kind]:>6}/{seen[kind]:<6}")
    for m in missed[:20]:
        print("missed:", *m)
    return 1 if missed else 0


if __name__ == "__main__":
    raise SystemExit(main())
