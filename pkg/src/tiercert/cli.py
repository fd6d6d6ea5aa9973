"""Command-line entry point: ``tiercert <command> [file] [options]``.

Exit status: 0 ok/accepted, 1 rejected or failed, 2 usage or grammar error,
3 search exhausted or primality undecided.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .errors import GrammarError, PrimalityUndecided, SearchExhausted, UsageError
from .ring_kernel import Ideal, height, is_prime
from .ring_kernel.poly import format_poly
from .session import Session, format_ring, parse_session

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_SEARCH = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--order", choices=["grevlex", "lex"], help="override the monomial order of every ring")
    p.add_argument("--field", help="override the coefficient field (F<p> or Q)")
    p.add_argument("--seed", type=int, default=0, help="seed for the randomized searches")
    p.add_argument("--max-attempts", type=int, default=64)
    p.add_argument("--degree-bound", type=int, default=2)
    p.add_argument("--primality-policy", choices=["fail", "assume"], default="fail")
    p.add_argument("--out", help="output file (certify) or directory (corpus)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = _Parser(prog="tiercert", description="Tier certificates for modules over affine algebras.")
    sub = ap.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def cmd(name, help_, file=True):
        sp = sub.add_parser(name, parents=[common], help=help_)
        if file:
            sp.add_argument("file", help="session file (.tf)")
            sp.add_argument("--ring", help="ring name (default: the last declared ring)")
        return sp

    cmd("sing", "singular locus, its codimension and the isolated flag")
    for name, what in (("dim", "Krull dimension of R/I"), ("height", "height of I"), ("prime", "primality of I")):
        cmd(name, what).add_argument("--ideal", required=True)
    sp = cmd("koszul", "Koszul complex ranks and homology")
    sp.add_argument("--ideal", help="elements (default: the variables)")
    sp.add_argument("--module")
    sp = cmd("pd", "projective dimension, global or at a prime")
    sp.add_argument("--module", required=True)
    sp.add_argument("--prime", help="ideal name for the local pd")
    sp = cmd("depth", "depth with respect to an ideal")
    sp.add_argument("--module", required=True)
    sp.add_argument("--ideal", help="default: the variables")
    cmd("certify", "build a tier certificate").add_argument("--module", required=True)
    sp = sub.add_parser("verify", parents=[common], help="check a certificate file")
    sp.add_argument("file", help="certificate (.json)")
    sp = cmd("decompose", "decompose a tier-n module")
    sp.add_argument("--module", required=True)
    sp.add_argument("--n", type=int, required=True)
    sp = cmd("corpus", "run the built-in acceptance suite", file=False)
    sp.add_argument("--oracle-instances", type=int, default=100)
    return ap


def _config(args):
    from .tier_builder import BuilderConfig

    return BuilderConfig(
        max_random_attempts=args.max_attempts,
        random_seed=args.seed,
        degree_bound=args.degree_bound,
        primality_policy=args.primality_policy,
    )


def _session(args) -> Session:
    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {args.file}: {e.strerror}")
    s = parse_session(text, field=args.field, order=args.order)
    s.config = _config(args)
    s.out = args.out
    return s


def _ideal(s: Session, R, name: str | None) -> Ideal:
    if name is None:
        return R.maximal_ideal()
    I = s.ideal(name)
    if I.ring != R:
        raise UsageError(f"ideal {name} lives over a different ring")
    return I


def _ideal_text(I: Ideal) -> str:
    gens = I.generators()
    return "(" + ", ".join(format_poly(g) for g in gens) + ")" if gens else "(0)"


class _Out:
    def __init__(self, as_json: bool):
        self.as_json = as_json
        self.data: dict = {}
        self.lines: list[str] = []

    def put(self, key, value, line: str | None = None):
        self.data[key] = value
        if line is not None:
            self.lines.append(line)

    def emit(self):
        if self.as_json:
            print(json.dumps(self.data, sort_keys=True, indent=2))
        else:
            for ln in self.lines:
                print(ln)


def _run_sing(args, s, out):
    from .singularity import codim_sing, is_isolated_singularity, sing_ideal

    R = s.ring(args.ring)
    name = args.ring or s.names("ring")[-1]
    J = sing_ideal(R)
    c = codim_sing(R)
    iso = is_isolated_singularity(R)
    locus = "∅" if J.is_unit() else f"V{_ideal_text(J)}"
    out.put("ring", format_ring(R))
    out.put("sing_ideal", None if J.is_unit() else [format_poly(g) for g in J.generators()])
    out.put("codim_sing", c, f"Sing {name} = {locus}, c = {c}")
    out.put("isolated", iso, f"isolated singularity: {'yes' if iso else 'no'}")
    return EXIT_OK


def _run_ideal_query(args, s, out):
    I = s.ideal(args.ideal)
    if args.command == "dim":
        d = I.dim()
        out.put("dim", d, f"dim R/{args.ideal} = {d}")
    elif args.command == "height":
        h = height(I)
        out.put("height", h, f"height {args.ideal} = {h}")
    else:
        r = is_prime(I)
        out.put("status", r.status, f"{args.ideal}: {r.status.replace('_', ' ')} (layer {r.layer})")
        out.put("layer", r.layer)
        if r.witness:
            f, g = r.witness
            out.put("witness", [format_poly(f), format_poly(g)], f"witness: ({format_poly(f)})*({format_poly(g)}) in {args.ideal}")
        if r.undecided:
            raise PrimalityUndecided(f"primality of {args.ideal} undecided", I)
    return EXIT_OK


def _run_koszul(args, s, out):
    from .koszul import koszul_complex, koszul_homology

    M = s.module(args.module) if args.module else None
    R = M.ring if M is not None else s.ring(args.ring)
    I = _ideal(s, R, args.ideal)
    xs = list(I.gens) if args.ideal else R.gens()
    K = koszul_complex(R, xs)
    ranks = [K.rank(i) for i in range(len(xs) + 1)]
    out.put("elements", [format_poly(x) for x in xs], "K(" + ", ".join(format_poly(x) for x in xs) + ")")
    out.put("ranks", ranks, "ranks: " + " ".join(str(r) for r in ranks))
    hs = []
    for i in range(len(xs) + 1):
        H = koszul_homology(K, i, M)
        zero = H.is_zero()
        hs.append({"degree": i, "zero": zero, "generators": H.ngens})
        out.lines.append(f"H_{i}: " + ("0" if zero else f"nonzero, {H.ngens} generators, {H.nrels} relations"))
    out.put("homology", hs)
    return EXIT_OK


def _run_pd(args, s, out):
    from .module_kernel import free_resolution
    from .tier_builder import pd_at_prime

    M = s.module(args.module)
    if args.prime:
        lp = pd_at_prime(M, _ideal(s, M.ring, args.prime))
        out.put("pd", lp.value, f"pd_{args.prime} {args.module} = {lp}")
        out.put("status", lp.status)
        return EXIT_OK
    res = free_resolution(M)
    out.put("pd", res.pd_report(), f"pd {args.module} = {res.pd_report()}")
    out.put("ranks", res.ranks, "ranks: " + " ".join(str(r) for r in res.ranks))
    return EXIT_OK


def _run_depth(args, s, out):
    from .koszul import depth

    M = s.module(args.module)
    I = _ideal(s, M.ring, args.ideal)
    d = depth(M, list(I.gens) if args.ideal else M.ring.gens())
    shown = "inf" if d == float("inf") else int(d)
    out.put("depth", shown, f"depth {args.module} = {shown}")
    return EXIT_OK


def _run_certify(args, s, out):
    from .certificate import dumps
    from .tier_builder import Builder

    M = s.module(args.module)
    cert = Builder(M.ring, s.config).certify(M)
    text = dumps(cert)
    if args.out:
        Path(args.out).write_text(text, encoding="utf-8")
        out.put("out", args.out)
    elif args.json:
        out.put("certificate", json.loads(text))
    out.put("tier", cert.claimed_tier, f"tier {cert.claimed_tier}")
    return EXIT_OK


def _run_verify(args, out):
    from .certificate import loads, verify

    try:
        text = Path(args.file).read_text(encoding="utf-8")
    except OSError as e:
        raise UsageError(f"cannot read {args.file}: {e.strerror}")
    try:
        rep = verify(loads(text))
    except GrammarError as e:
        out.put("accepted", False, f"rejected: {e}")
        out.put("failures", [["$", str(e)]])
        return EXIT_FAIL
    out.put("accepted", rep.accepted)
    out.put("failures", [list(f) for f in rep.failures])
    if rep.accepted:
        out.put("tier", rep.tier_index, f"accepted, tier {rep.tier_index}")
        return EXIT_OK
    out.lines.append("rejected")
    for path, why in rep.failures:
        out.lines.append(f"  {path}: {why}")
    return EXIT_FAIL


def _run_decompose(args, s, out):
    from .tier_builder import Builder, decompose_tier

    M = s.module(args.module)
    cert = Builder(M.ring, s.config).certify(M)
    dec = decompose_tier(cert, args.n)
    out.put("tier", cert.claimed_tier, f"tier {cert.claimed_tier}, n = {args.n}")
    out.put("L_generators", dec.L.ngens, f"L: {dec.L.ngens} generators, {dec.L.nrels} relations")
    out.put("P_rank", dec.P.ngens, f"P: {dec.P.ngens} generators, {dec.P.nrels} relations")
    out.put("checks", dec.checks)
    for k, v in dec.checks.items():
        out.lines.append(f"{k}: {v}")
    return EXIT_OK if dec.ok else EXIT_FAIL


def _run_corpus(args, out):
    from .corpus import certificate_table, run_corpus

    run = run_corpus(_config(args), args.out, args.oracle_instances)
    out.put("certificates", {k: c.claimed_tier for k, c in run.certificates.items()}, certificate_table(run))
    out.lines.append("")
    rows = []
    for r in run.results:
        rows.append({"criterion": r.number, "title": r.title, "passed": r.passed, "detail": r.detail})
        out.lines.append(f"[{'PASS' if r.passed else 'FAIL'}] {r.number:>2}. {r.title}: {r.detail}")
    out.put("criteria", rows)
    return EXIT_OK if run.ok else EXIT_FAIL


def run(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE
    out = _Out(args.json)
    try:
        if args.command == "verify":
            code = _run_verify(args, out)
        elif args.command == "corpus":
            code = _run_corpus(args, out)
        else:
            s = _session(args)
            handler = {
                "sing": _run_sing,
                "dim": _run_ideal_query,
                "height": _run_ideal_query,
                "prime": _run_ideal_query,
                "koszul": _run_koszul,
                "pd": _run_pd,
                "depth": _run_depth,
                "certify": _run_certify,
                "decompose": _run_decompose,
            }[args.command]
            code = handler(args, s, out)
    except (SearchExhausted, PrimalityUndecided) as e:
        out.emit()
        print(f"error: {e}", file=sys.stderr)
        return EXIT_SEARCH
    except (UsageError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    out.emit()
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
