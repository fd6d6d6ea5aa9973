"""Certify the corpus under several seeds: tiers must not depend on the seed."""

import argparse
import hashlib

from tiercert.corpus import build_certificates
from tiercert.tier_builder import BuilderConfig


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, nargs="*", default=[0, 1, 2, 3, 12345])
    args = ap.parse_args()
    tiers = {}
    for seed in args.seeds:
        run = build_certificates(BuilderConfig(random_seed=seed))
        digest = hashlib.sha256("".join(run.texts.values()).encode()).hexdigest()[:12]
        tiers[seed] = {k: c.claimed_tier for k, c in run.certificates.items()}
        print(f"seed {seed:>6}: corpus digest {digest}")
    first = tiers[args.seeds[0]]
    drift = [(s, k) for s, t in tiers.items() for k in t if t[k] != first[k]]
    print("tiers identical across seeds" if not drift else f"tier drift: {drift}")
    return 1 if drift else 0


if __name__ == "__main__":
    raise SystemExit(main())
