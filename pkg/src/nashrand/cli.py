"""Command-line front end.

Subcommands: gen, solve, verify, scan, recurrence, sample, analyze, bound.
Exit codes: 0 success, 2 parse/validation error, 3 hypothesis violation,
4 resource limit.  NASHRAND_MAX_N overrides the default enumeration limit;
an explicit --max-n beats both.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
import time

from . import families
from .errors import (
    DimensionMismatch,
    DimensionTooLarge,
    HasPureNE,
    HypothesisViolation,
    NotADistribution,
    ParseError,
    SamplerStall,
    SymmetryViolation,
    UnknownFamily,
    UnsupportedDimension,
)
from .exact import cofactor_sum, det
from .games import (
    Game,
    capability_admissible,
    complexity,
    entropy,
    is_nash,
    storage_bits,
    strategy_to_json,
)
from .sampling import BitSource, analyze, build_sampler
from .serialize import (
    dumps_game,
    load_distribution,
    load_game,
    load_profile,
)
from .solving import complexity_upper_bound, support_enumeration

GEN_FAMILIES = (
    "beta",
    "primeblock",
    "permutation",
    "constsum-beta",
    "constsum-primeblock",
    "example1",
    "example2",
)
SCAN_FAMILIES = ("beta", "primeblock", "constsum-beta", "constsum-primeblock")


def _write(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def generate_family(family: str, n: int | None) -> Game:
    if family == "example1":
        if n not in (None, 8):
            raise UnsupportedDimension("example1 is fixed at n = 8")
        game = families.beta_game(8)
        return Game(game.A, game.B, family_tag="example1")
    if family == "example2":
        if n not in (None, 8):
            raise UnsupportedDimension("example2 is fixed at n = 8")
        rev = families.Permutation.reversal(8)
        game = families.constant_sum_transform(families.beta_game(8), rev, rev)
        return Game(game.A, game.B, family_tag="example2", constant_sum=1)
    if n is None:
        raise UnsupportedDimension(f"family {family!r} requires --n")
    if family == "beta":
        return families.beta_game(n)
    if family == "primeblock":
        return families.prime_block_game(n)
    if family == "permutation":
        if n < 1:
            raise UnsupportedDimension("permutation family needs n >= 1")
        pi = families.Permutation.identity(n)
        tau = families.Permutation.forward_cycle(n)
        game, _ = families.permutation_game(pi, tau)
        return game
    if family == "constsum-beta":
        game, _, _ = families.constant_sum_beta(n)
        return game
    if family == "constsum-primeblock":
        game, _, _ = families.constant_sum_prime_block(n)
        return game
    raise UnknownFamily(f"unknown family {family!r}; choose from {GEN_FAMILIES}")


def cmd_gen(args: argparse.Namespace) -> int:
    game = generate_family(args.family, args.n)
    _write(dumps_game(game), args.out)
    return 0


def _solve_jsonable(game: Game, max_n: int | None) -> dict:
    report = support_enumeration(game, max_n)
    return {
        "n": game.n,
        "equilibria": [
            {
                "x": strategy_to_json(p.x),
                "y": strategy_to_json(p.y),
                "complexity_x": str(complexity(p.x)),
                "complexity_y": str(complexity(p.y)),
                "support_x": list(p.x.support()),
                "support_y": list(p.y.support()),
            }
            for p in report.equilibria
        ],
        "c1_min": None if report.c1_min is None else str(report.c1_min),
        "c2_min": None if report.c2_min is None else str(report.c2_min),
        "degenerate": report.degenerate_flag,
        "enumerated_supports": report.enumerated_supports,
    }


def _solve_csv(payload: dict) -> str:
    lines = [
        "index,complexity_x,complexity_y,"
        "x_numerators,x_denominator,y_numerators,y_denominator"
    ]
    for idx, eq in enumerate(payload["equilibria"], start=1):
        lines.append(
            ",".join(
                [
                    str(idx),
                    eq["complexity_x"],
                    eq["complexity_y"],
                    " ".join(eq["x"]["numerators"]),
                    eq["x"]["denominator"],
                    " ".join(eq["y"]["numerators"]),
                    eq["y"]["denominator"],
                ]
            )
        )
    return "\n".join(lines) + "\n"


def cmd_solve(args: argparse.Namespace) -> int:
    game = load_game(args.game)
    payload = _solve_jsonable(game, args.max_n)
    if payload["degenerate"]:
        print(
            "note: degeneracy detected; reported minima range over extreme "
            "equilibria only",
            file=sys.stderr,
        )
    if args.format == "csv":
        _write(_solve_csv(payload), args.out)
    else:
        _write(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    game = load_game(args.game)
    profile = load_profile(args.profile)
    nash = is_nash(game, profile)
    payload: dict = {
        "nash": nash,
        "complexity_x": str(complexity(profile.x)),
        "complexity_y": str(complexity(profile.y)),
        "storage_bits_x": storage_bits(profile.x),
        "storage_bits_y": storage_bits(profile.y),
    }
    if args.c1 is not None:
        payload["capability_ok_1"] = capability_admissible(profile.x, args.c1)
    if args.c2 is not None:
        payload["capability_ok_2"] = capability_admissible(profile.y, args.c2)
    _write(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def _scan_row(family: str, n: int) -> dict:
    start = time.perf_counter()
    if family == "beta":
        profile, c1 = families.beta_ne(n)
        c2 = n
        table = families.recurrence_table(n)
        g = table.g(n)
        absdet = 2 * abs(table.b(n)) + abs(table.a(n))
        abs_k = c1 * g
    elif family == "constsum-beta":
        _, profile, c1 = families.constant_sum_beta(n)
        c2 = c1
        table = families.recurrence_table(n)
        g = table.g(n)
        absdet = 2 * abs(table.b(n)) + abs(table.a(n))
        abs_k = c1 * g
    elif family == "primeblock":
        profile, c1 = families.prime_block_ne(n)
        c2 = profile.y.n
        g = None
        b = families.prime_block_game(n).B
        absdet = abs(det(b))
        abs_k = abs(cofactor_sum(b, method="solve"))
    elif family == "constsum-primeblock":
        _, profile, c1 = families.constant_sum_prime_block(n)
        c2 = c1
        g = None
        b = families.prime_block_game(n).B
        absdet = abs(det(b))
        abs_k = abs(cofactor_sum(b, method="solve"))
    else:
        raise UnknownFamily(
            f"family {family!r} has no closed-form scan; choose from {SCAN_FAMILIES}"
        )
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    return {
        "n": profile.x.n,
        "c1": c1,
        "c2": c2,
        "log2_c1_over_n": math.log2(c1) / profile.x.n if c1 >= 1 else 0.0,
        "g_n": g,
        "abs_det": absdet,
        "abs_k": abs_k,
        "wallclock_ms": elapsed_ms,
    }


def cmd_scan(args: argparse.Namespace) -> int:
    rows = [_scan_row(args.family, n) for n in range(args.start, args.stop + 1)]
    lines = ["n,c1,c2,log2_c1_over_n,g_n,abs_det,abs_k,wallclock_ms"]
    for row in rows:
        lines.append(
            ",".join(
                [
                    str(row["n"]),
                    str(row["c1"]),
                    str(row["c2"]),
                    f"{row['log2_c1_over_n']:.6g}",
                    "" if row["g_n"] is None else str(row["g_n"]),
                    str(row["abs_det"]),
                    str(row["abs_k"]),
                    f"{row['wallclock_ms']:.6g}",
                ]
            )
        )
    _write("\n".join(lines) + "\n", args.out)
    return 0


def cmd_recurrence(args: argparse.Namespace) -> int:
    if args.to < 8:
        raise UnsupportedDimension("recurrence table needs --to >= 8")
    table = families.recurrence_table(args.to)
    lines = ["n,a,b,det_b,g,ratio_b_next_over_b"]
    for n in range(1, args.to + 1):
        ratio = "" if table.b(n) == 0 else f"{table.b(n + 1) / table.b(n):.6g}"
        lines.append(
            f"{n},{table.a(n)},{table.b(n)},{table.det_b(n)},{table.g(n)},{ratio}"
        )
        assert table.a(n) - table.b(n) - table.b(n + 1) == 0
    lines.append("# identities verified: a(n) = b(n) + b(n+1); "
                 "det recurrence; sign(b(n)) = (-1)^n for n >= 4")
    _write("\n".join(lines) + "\n", args.out)
    return 0


def cmd_sample(args: argparse.Namespace) -> int:
    dist = load_distribution(args.dist)
    sampler = build_sampler(dist)
    bits = BitSource(args.seed)
    counts = [0] * dist.n
    for _ in range(args.count):
        counts[sampler.sample(bits) - 1] += 1
    payload = {
        "count": args.count,
        "seed": args.seed,
        "outcome_counts": counts,
        "bits_consumed": bits.bits_consumed,
        "bits_per_sample": bits.bits_consumed / args.count if args.count else 0.0,
        "entropy_bits": entropy(dist),
    }
    _write(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def cmd_analyze(args: argparse.Namespace) -> int:
    dist = load_distribution(args.dist)
    report = analyze(build_sampler(dist), args.depth)
    payload = {
        "depth": report.depth,
        "resolved": [f"{r.numerator}/{r.denominator}" for r in report.resolved],
        "tail": f"{report.tail.numerator}/{report.tail.denominator}",
        "tail_bound": f"{dist.n}/2^{args.depth}",
        "expected_bits_partial": report.expected_bits,
        "entropy_bits": entropy(dist),
    }
    _write(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def cmd_bound(args: argparse.Namespace) -> int:
    game = load_game(args.game)
    b1, b2 = complexity_upper_bound(game)
    payload: dict = {
        "n": game.n,
        "bound_c1": str(b1),
        "bound_c2": str(b2),
        "measured_c1": None,
        "measured_c2": None,
    }
    try:
        report = support_enumeration(game, args.max_n)
        if report.c1_min is not None:
            payload["measured_c1"] = str(report.c1_min)
            payload["measured_c2"] = str(report.c2_min)
    except DimensionTooLarge:
        pass
    _write(json.dumps(payload, indent=2) + "\n", args.out)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nashrand",
        description="Exact Nash equilibria and the randomness they demand.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="write a family game as JSON")
    p.add_argument("family", choices=GEN_FAMILIES)
    p.add_argument("--n", type=int, default=None,
                   help="dimension (beta, permutation) or prime count (primeblock)")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("solve", help="enumerate all extreme equilibria")
    p.add_argument("game", help="game JSON file")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check a profile against a game")
    p.add_argument("game")
    p.add_argument("profile")
    p.add_argument("--c1", type=int, default=None)
    p.add_argument("--c2", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("scan", help="closed-form complexity growth as CSV")
    p.add_argument("family", choices=SCAN_FAMILIES)
    p.add_argument("--from", dest="start", type=int, required=True)
    p.add_argument("--to", dest="stop", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("recurrence", help="print the recurrence table")
    p.add_argument("--to", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_recurrence)

    p = sub.add_parser("sample", help="draw seeded samples from a distribution")
    p.add_argument("dist", help="distribution JSON file")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("analyze", help="exact sampler resolution report")
    p.add_argument("dist")
    p.add_argument("--depth", type=int, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("bound", help="worst-case complexity bound for a game")
    p.add_argument("game")
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_bound)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ParseError, NotADistribution, UnknownFamily, UnsupportedDimension,
            DimensionMismatch, FileNotFoundError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (HypothesisViolation, SymmetryViolation, HasPureNE) as exc:
        print(f"hypothesis violation: {exc}", file=sys.stderr)
        return 3
    except (DimensionTooLarge, SamplerStall) as exc:
        print(f"resource limit: {exc}", file=sys.stderr)
        return 4


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
