"""Command-line front end: profile generation, counting, verification, estimates.

All numeric output is plain decimal without digit grouping.  Exit code 0
means every requested computation finished and every internal validation
passed.
"""

from __future__ import annotations

import argparse
import logging
import os
import sys
from pathlib import Path

from . import oracle, profiles, symmetry, truthtable
from .enumeration import (
    KNOWN_CLASS_COUNTS,
    KNOWN_DEDEKIND,
    CountOptions,
    count_all,
    count_by_minterms,
    count_profile,
    korshunov_estimate,
    lower_bound_R,
)
from .profiles import format_profile, generate_profiles, parse_profile

CHECKPOINT_ENV = "MBFKIT_CHECKPOINT_DIR"


def cmd_profiles(n: int, output_path: str | None = None) -> int:
    """Write the profile list for n and print how many profiles there are."""
    try:
        rows = generate_profiles(n)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    if output_path:
        with open(output_path, "w") as fh:
            for row in rows:
                fh.write(format_profile(tuple(int(v) for v in row)) + "\n")
    print(len(rows))
    return 0


def _resolve_checkpoint_dir(args, n: int) -> Path | None:
    if args.no_checkpoint:
        return None
    if args.checkpoint_dir:
        return Path(args.checkpoint_dir)
    env = os.environ.get(CHECKPOINT_ENV)
    if env:
        return Path(env)
    if n >= 6:
        # long runs checkpoint by default, in the current directory
        return Path(f"mbfkit_checkpoints_n{n}")
    return None


def cmd_count(
    n: int,
    profile: str | None = None,
    k: int | None = None,
    extended: bool = False,
    jobs: int | None = None,
    checkpoint_dir: Path | None = None,
    output: str | None = None,
) -> int:
    """Count inequivalent and labeled monotone functions at dimension n."""
    if profile is not None:
        try:
            p = parse_profile(profile)
            if len(p) != n:
                raise ValueError(f"profile length {len(p)} does not match n={n}")
            r_count, d_count = count_profile(n, p)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return 1
        print(f"profile={format_profile(p)} R={r_count} D={d_count}")
        return 0

    options = CountOptions(
        jobs=jobs if jobs else (os.cpu_count() or 1),
        checkpoint_dir=checkpoint_dir,
        extended=extended,
        max_minterms=k,
    )
    try:
        report = count_all(n, options)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1

    out_path = output or f"mbf_counts_n{n}.csv"
    report.write_csv(out_path)
    if k is not None:
        print(f"R_{k}({n})={count_by_minterms(report, k)}")
    else:
        print(f"R({n})={report.r_total} D({n})={report.d_total}")
        print(f"asymmetric({n})={report.asymmetric_total}")
    print(f"per-profile counts written to {out_path}")
    return 0


def _verify_tables_and_classes(n: int) -> list[str]:
    failures = []
    want = oracle.brute_monotone_tables(n)
    got = [
        truthtable.TruthTable(n, bits)
        for bits in range(1 << (1 << n))
        if truthtable.is_monotone_bits(bits, n)
    ]
    if {t.bits for t in want} != {t.bits for t in got}:
        failures.append(f"n={n}: monotone table sets differ")

    by_canon: dict[int, int] = {}
    for t in got:
        rec = symmetry.canonical_form(t)
        by_canon[rec.canonical.bits] = by_canon.get(rec.canonical.bits, 0) + 1
    want_classes = oracle.brute_classes(n)
    if len(by_canon) != len(want_classes):
        failures.append(
            f"n={n}: {len(by_canon)} canonical classes vs oracle {len(want_classes)}"
        )
    else:
        want_sizes = sorted(len(c) for c in want_classes)
        if sorted(by_canon.values()) != want_sizes:
            failures.append(f"n={n}: orbit size multisets differ")
    return failures


def cmd_verify(n: int) -> int:
    """Cross-check fast paths against the brute-force oracle; 0 iff clean."""
    from math import comb

    failures: list[str] = []

    def check(label: str, new_failures: list[str]) -> None:
        failures.extend(new_failures)
        print(f"{label}: {'ok' if not new_failures else 'FAIL'}")

    for m in range(0, min(n, 4) + 1):
        check(f"tables/classes n={m}", _verify_tables_and_classes(m))

    if n >= 5:
        cls5 = oracle.brute_classes(5)
        rep5 = count_all(5)
        bad = (
            []
            if len(cls5) == rep5.r_total
            else [f"n=5: oracle {len(cls5)} classes vs report {rep5.r_total}"]
        )
        check("classes n=5", bad)

    bad = []
    for m in range(1, min(n, 5) + 1):
        for r in range(1, m + 1):
            for x in range(comb(m, r) + 1):
                if profiles.shadow_bound(m, r, x) != oracle.brute_min_shadow(m, r, x):
                    bad.append(f"shadow mismatch at (n={m}, r={r}, x={x})")
    check("shadow bounds", bad)

    check_n = min(n, 5)
    report = count_all(check_n)
    below = count_all(check_n - 1) if check_n >= 1 else None
    bad = []
    for p, c in report.per_profile.items():
        if p[0] > 0 and below is not None:
            src = below.per_profile[profiles.strip_singleton(p)]
            if src.r_count != c.r_count:
                bad.append(f"strip identity fails at {format_profile(p)}")
        q = profiles.reverse_dual_profile(p)
        d = report.per_profile[q]
        if (d.r_count, d.d_count) != (c.r_count, c.d_count):
            bad.append(f"reversal duality fails at {format_profile(p)}")
        nz = [i for i, v in enumerate(p) if v]
        if len(nz) == 1:
            comp = profiles.complement_profile(p)
            if comp in report.per_profile:
                e = report.per_profile[comp]
                if (e.r_count, e.d_count) != (c.r_count, c.d_count):
                    bad.append(f"complement identity fails at {format_profile(p)}")
    check("count identities", bad)

    for line in failures:
        print(f"FAIL: {line}", file=sys.stderr)
    print("verify: PASS" if not failures else "verify: FAIL")
    return 0 if not failures else 1


def cmd_estimate(n: int) -> int:
    """Print the asymptotic estimate and lower bounds where data allows."""
    import mpmath as mp

    if n >= 2:
        est = korshunov_estimate(n)
        print(f"korshunov_estimate({n})={mp.nstr(est, 12)}")
        if n in KNOWN_DEDEKIND:
            d = KNOWN_DEDEKIND[n]
            print(f"D({n})={d}")
            print(f"ratio D/estimate={mp.nstr(d / est, 8)}")
    else:
        print(f"korshunov_estimate({n}): defined for n >= 2 only")
    if n in KNOWN_DEDEKIND:
        bound = lower_bound_R(n, KNOWN_DEDEKIND[n])
        line = f"lower_bound_R({n})={bound}"
        if n in KNOWN_CLASS_COUNTS:
            line += f" (R({n})={KNOWN_CLASS_COUNTS[n]})"
        print(line)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="mbfkit",
        description="Count monotone Boolean functions and their equivalence "
        "classes, profile by profile.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("profiles", help="generate the realizable profile list")
    p.add_argument("n", type=int)
    p.add_argument("-o", "--output", help="write one profile per line here")

    c = sub.add_parser("count", help="count functions and classes")
    c.add_argument("n", type=int)
    c.add_argument("--profile", help='count one profile, e.g. "(0,3,2,0,0)"')
    c.add_argument("--k", type=int, help="restrict to at most k minimal terms "
                   "and report the k-term class count")
    c.add_argument("--extended", action="store_true",
                   help="allow the cluster-scale n=7 run")
    c.add_argument("--jobs", type=int, help="concurrent profile tasks "
                   "(default: available parallelism)")
    c.add_argument("--checkpoint-dir", help=f"checkpoint directory "
                   f"(default ${CHECKPOINT_ENV} or ./mbfkit_checkpoints_nN for n >= 6)")
    c.add_argument("--no-checkpoint", action="store_true")
    c.add_argument("--output", help="counts CSV path (default ./mbf_counts_nN.csv)")

    v = sub.add_parser("verify", help="cross-check fast paths against brute force")
    v.add_argument("n", type=int)

    e = sub.add_parser("estimate", help="asymptotic estimate and lower bounds")
    e.add_argument("n", type=int)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
    if args.command == "profiles":
        return cmd_profiles(args.n, args.output)
    if args.command == "count":
        return cmd_count(
            args.n,
            profile=args.profile,
            k=args.k,
            extended=args.extended,
            jobs=args.jobs,
            checkpoint_dir=_resolve_checkpoint_dir(args, args.n),
            output=args.output,
        )
    if args.command == "verify":
        return cmd_verify(args.n)
    if args.command == "estimate":
        return cmd_estimate(args.n)
    raise AssertionError("unreachable")


if __name__ == "__main__":
    sys.exit(main())
