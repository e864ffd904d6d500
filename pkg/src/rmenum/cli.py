"""Command-line surface: `rm` (also available as `python -m rmenum`).

Subcommands cover the whole workflow: brute-force distributions, single
coset enumerators, quotient classification, the doubling pipeline, file
verification, equivalence search, and the shipped dual-transition check.
Every command is deterministic given its --seed; output files are
bit-identical across reruns and across --jobs values, and seeds are
recorded in file headers.
"""

from __future__ import annotations

import argparse
import random
import sys

from . import __version__
from .boolfn import format_anf, parse_anf
from .classify import (
    DEFAULT_MAX_GENS,
    classify_quotient,
    write_classification,
)
from .cosetenum import coset_enumerator, rm_dimension
from .fixtures import (
    check_dual_transitions,
    load_dual_transitions,
    parse_dual_transitions,
)
from .gf2 import DEFAULT_EQUIV_BUDGET, AffineMap, find_equivalence, transform_anf
from .oracle import brute_force_distribution, validate_reference
from .pipeline import MulCounter, run_pipeline
from .wenum import polynomial_text, write_distribution


def _emit_distribution(dist, out, comments):
    if out:
        write_distribution(out, dist, comments=comments)
        print(f"wrote {out}")
    else:
        write_distribution(sys.stdout, dist, comments=comments)


def _cmd_brute(args) -> int:
    dist = brute_force_distribution(args.r, args.m, jobs=args.jobs)
    dim = rm_dimension(args.r, args.m)
    _emit_distribution(dist, args.out, [f"R({args.r},{args.m})"])
    total = dist.total()
    status = "ok" if total == 1 << dim else "MISMATCH"
    print(f"total {total} = 2^{dim} {status}")
    return 0 if status == "ok" else 1


def _cmd_coset(args) -> int:
    rep = parse_anf(args.anf, args.m)
    dist = coset_enumerator(rep, args.r, args.m)
    print(polynomial_text(dist))
    if args.out:
        comments = [f"{format_anf(rep)} + R({args.r},{args.m})"]
        write_distribution(args.out, dist, comments=comments)
        print(f"wrote {args.out}")
    return 0


def _cmd_classify(args) -> int:
    rng = random.Random(args.seed)
    records = classify_quotient(args.d, args.m, rng, max_gens=args.max_gens)
    write_classification(args.out, records, args.d, args.m, seed=args.seed)
    sizes = sorted(rec.size for rec in records)
    print(f"wrote {args.out}")
    print(f"{len(records)} classes, sizes sum to {sum(sizes)}, largest {sizes[-1]}")
    return 0


def _cmd_pipeline(args) -> int:
    counter = MulCounter()
    dist = run_pipeline(
        args.r,
        args.m,
        classes=args.classes,
        strategy=args.strategy,
        seed=args.seed,
        jobs=args.jobs,
        checkpoint=args.checkpoint,
        counter=counter,
    )
    comments = [f"R({args.r},{args.m})", f"seed {args.seed}"]
    _emit_distribution(dist, args.out, comments)
    print(f"{counter.count} polynomial multiplications")
    return 0


def _cmd_verify(args) -> int:
    report = validate_reference(args.dist, args.r, args.m)
    for line in report.lines():
        print(line)
    return 0 if report.ok else 1


def _cmd_equiv(args) -> int:
    e1 = parse_anf(args.e1, args.m)
    e2 = parse_anf(args.e2, args.m)
    d = max(e1.degree(), e2.degree())
    rng = random.Random(args.seed)
    mat = find_equivalence(
        e1, e2, max(d - 1, 0), args.budget, rng, progress_every=args.progress
    )
    if mat is None:
        print(f"no substitution found within {args.budget} attempts", file=sys.stderr)
        return 1
    for row in mat.to_text().split():
        print(row)
    diff = transform_anf(e1, AffineMap(mat, 0)) ^ e2
    ok = diff.is_zero() or diff.degree() < d
    print(f"{'PASS' if ok else 'FAIL'} (e1 o A) + e2 has degree below {d}")
    return 0 if ok else 1


def _cmd_dualcheck(args) -> int:
    if args.table is None:
        rows = load_dual_transitions()
    else:
        with open(args.table) as fh:
            rows = parse_dual_transitions(fh.read())
    lines = check_dual_transitions(rows)
    for line in lines:
        print(line)
    return 0 if all(line.startswith("PASS") for line in lines) else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rm",
        description="Exact weight distributions of Reed-Muller codes and their cosets.",
        epilog=(
            "Installed as `rm`, which may shadow the coreutils rm depending on "
            "PATH order; `python -m rmenum` always works."
        ),
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("brute", help="enumerate every codeword of R(r,m)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--out", help="distribution file (default: stdout)")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=_cmd_brute)

    p = sub.add_parser("coset", help="weight enumerator of anf + R(r,m)")
    p.add_argument("--anf", required=True, help='monomial string, e.g. "12+34", "0" for zero')
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--out", help="optional distribution file")
    p.set_defaults(func=_cmd_coset)

    p = sub.add_parser("classify", help="classes of H^(d)(m) under invertible substitution")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--max-gens", type=int, default=DEFAULT_MAX_GENS)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("pipeline", help="full R(r,m) distribution via the doubling recursion")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--classes", help="classification file for H^(r)(m-1); omit to self-classify")
    p.add_argument("--strategy", choices=("direct", "blocks"), default="blocks")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--checkpoint", help="directory for per-class resume files")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", help="distribution file (default: stdout)")
    p.set_defaults(func=_cmd_pipeline)

    p = sub.add_parser("verify", help="check a distribution file against R(r,m) identities")
    p.add_argument("--dist", required=True)
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("equiv", help="search for a substitution carrying e1 onto e2")
    p.add_argument("--e1", required=True)
    p.add_argument("--e2", required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--budget", type=int, default=DEFAULT_EQUIV_BUDGET)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--progress", type=int, default=0, help="report every N attempts")
    p.set_defaults(func=_cmd_equiv)

    p = sub.add_parser("dualcheck", help="verify the shipped class-transition table")
    p.add_argument("--table", help="alternate table file (default: shipped data)")
    p.set_defaults(func=_cmd_dualcheck)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def console_main() -> None:
    sys.exit(main())
