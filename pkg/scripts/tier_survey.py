"""Tabulate tier, projective dimension, depth and certificate size over the corpus."""

import argparse
import time

from tiercert.certificate import dumps, extension_depth, walk
from tiercert.corpus import build_certificates
from tiercert.koszul import depth
from tiercert.module_kernel import free_resolution
from tiercert.singularity import codim_sing
from tiercert.tier_builder import BuilderConfig


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    t0 = time.perf_counter()
    run = build_certificates(BuilderConfig(random_seed=args.seed))
    elapsed = time.perf_counter() - t0
    print(f"{'entry':<12} {'c':>2} {'tier':>4} {'ext':>3} {'pd':>6} {'depth':>5} {'steps':>5} {'bytes':>6}")
    for name, c in run.certificates.items():
        M = c.root_module
        R = c.ring
        res = free_resolution(M, bound=4)
        d = depth(M, R.gens())
        nsteps = sum(1 for _ in walk(c.step))
        print(
            f"{name:<12} {codim_sing(R):>2} {c.claimed_tier:>4} {extension_depth(c.step):>3} "
            f"{res.pd_report():>6} {d!s:>5} {nsteps:>5} {len(dumps(c)):>6}"
        )
    print(f"\nbuilt {len(run.certificates)} certificates in {elapsed:.2f}s")


if __name__ == "__main__":
    main()
