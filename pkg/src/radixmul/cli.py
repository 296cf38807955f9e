"""Command-line front end: mul, verify, sweep, compare.

Operands accept decimal, 0x-prefixed hexadecimal, or bin:-prefixed
MSB-first binary. Exit codes: 0 success, 1 correctness failure,
2 usage or parse error.
"""

import argparse
import json
import os
import random
import sys

from .baseline import ProductMismatchError, compare
from .engine import (
    DEFAULT_CLOCK_PERIOD_NS,
    DEFAULT_DIGIT_BITS,
    DEFAULT_LOAD_DELAY_NS,
    FlushPolicy,
    SimConfig,
    cycle_count_model,
    simulate,
    to_trace_json,
)
from .word import Word, parse_word

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

SEED_ENV_VAR = "RADIXMUL_SEED"
EXHAUSTIVE_MAX_N = 10

DEFAULT_OPERAND_BITS = 16


def _add_config_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--n", type=int, default=DEFAULT_OPERAND_BITS,
                   help="operand width in bits (default 16)")
    p.add_argument("--k", type=int, default=DEFAULT_DIGIT_BITS,
                   help="multiplier digit width in bits (default 3)")
    p.add_argument("--adder-width", type=int, default=None,
                   help="central adder input lines (default n + 3k)")
    p.add_argument("--clock-ns", type=float, default=DEFAULT_CLOCK_PERIOD_NS,
                   help="clock period in ns (default 40)")
    p.add_argument("--load-ns", type=float, default=DEFAULT_LOAD_DELAY_NS,
                   help="multiplier load delay in ns (default 30)")
    p.add_argument("--flush", choices=[f.value for f in FlushPolicy],
                   default=FlushPolicy.FULL_WIDTH.value,
                   help="flush policy after the digits run out (default full_width)")


def _config_from_args(args) -> SimConfig:
    return SimConfig(
        n=args.n,
        k=args.k,
        adder_width=args.adder_width,
        clock_period_ns=args.clock_ns,
        load_delay_ns=args.load_ns,
        flush_policy=args.flush,
    )


def _resolve_seed(flag_value: int | None) -> int:
    if flag_value is not None:
        return flag_value
    env = os.environ.get(SEED_ENV_VAR)
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise ValueError(f"{SEED_ENV_VAR} must be an integer, got {env!r}") from None
    return random.SystemRandom().getrandbits(32)


def _cmd_mul(args) -> int:
    cfg = _config_from_args(args)
    a = parse_word(args.a, cfg.n)
    b = parse_word(args.b, cfg.n)
    result = simulate(a, b, cfg)
    doc = to_trace_json(result)
    if args.trace:
        with open(args.trace, "w", encoding="utf-8") as f:
            f.write(doc + "\n")
    if args.json:
        print(doc)
    else:
        print(f"product (bin) {result.product.to_bin()}")
        print(f"product (dec) {result.product.value}")
        print(f"product (hex) {result.product.to_hex()}")
        print(f"cycles        {result.cycles}")
        print(f"total_time_ns {result.total_time_ns:g}")
    return EXIT_OK


def _cmd_verify(args) -> int:
    cfg = _config_from_args(args)
    n = cfg.n
    if args.exhaustive:
        if n > EXHAUSTIVE_MAX_N:
            print(f"error: --exhaustive is limited to n <= {EXHAUSTIVE_MAX_N}",
                  file=sys.stderr)
            return EXIT_USAGE
        mode = "exhaustive"
        seed = None
        size = 1 << n
        pairs = ((av, bv) for av in range(size) for bv in range(size))
        total = size * size
    else:
        mode = f"random {args.random}"
        seed = _resolve_seed(args.seed)
        rng = random.Random(seed)
        pairs = ((rng.getrandbits(n), rng.getrandbits(n)) for _ in range(args.random))
        total = args.random

    failures = 0
    first_failure = None
    for av, bv in pairs:
        try:
            compare(Word(av, n), Word(bv, n), cfg)
        except ProductMismatchError as exc:
            failures += 1
            if first_failure is None:
                first_failure = str(exc)

    if args.json:
        print(json.dumps({
            "n": n,
            "k": cfg.k,
            "mode": mode,
            "seed": seed,
            "pairs": total,
            "failures": failures,
            "first_failure": first_failure,
        }))
    else:
        tail = "" if seed is None else f" (seed {seed})"
        print(f"verify n={n} k={cfg.k} {mode}: {total} pairs, "
              f"{failures} failures{tail}")
        if first_failure is not None:
            print(f"MISMATCH {first_failure}", file=sys.stderr)
    return EXIT_MISMATCH if failures else EXIT_OK


def _parse_k_range(text: str, n: int) -> range:
    if ".." in text:
        lo_text, hi_text = text.split("..", 1)
        lo, hi = int(lo_text), int(hi_text)
    else:
        lo = hi = int(text)
    cap = min(8, n)
    if not 1 <= lo <= hi <= cap:
        raise ValueError(f"k range must lie within 1..{cap}, got {text!r}")
    return range(lo, hi + 1)


def _cmd_sweep(args) -> int:
    ks = _parse_k_range(args.k, args.n)
    n = args.n
    all_ones = Word((1 << n) - 1, n)
    rows = []
    for k in ks:
        full_cfg = SimConfig(n=n, k=k, flush_policy=FlushPolicy.FULL_WIDTH)
        early_cfg = SimConfig(n=n, k=k, flush_policy=FlushPolicy.EARLY_STOP)
        rows.append({
            "k": k,
            "digit_cycles": full_cfg.digit_cycles,
            "cycles_full_width": cycle_count_model(all_ones, all_ones, full_cfg),
            "cycles_early_stop_max": cycle_count_model(all_ones, all_ones, early_cfg),
            "adder_width": full_cfg.adder_width,
            "table_size": 1 << (k - 1),
        })
    if args.json:
        print(json.dumps(rows))
    else:
        header = (" k  digit_cycles  cycles_full_width  "
                  "cycles_early_stop_max  adder_width  table_size")
        print(header)
        for row in rows:
            print(f"{row['k']:2d}  {row['digit_cycles']:12d}  "
                  f"{row['cycles_full_width']:17d}  "
                  f"{row['cycles_early_stop_max']:21d}  "
                  f"{row['adder_width']:11d}  {row['table_size']:10d}")
    return EXIT_OK


def _cmd_compare(args) -> int:
    cfg = _config_from_args(args)
    a = parse_word(args.a, cfg.n)
    b = parse_word(args.b, cfg.n)
    report = compare(a, b, cfg)
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        print(f"a = {a.value} ({a.to_hex()}, bin {a.to_bin()})")
        print(f"b = {b.value} ({b.to_hex()}, bin {b.to_bin()})")
        print(f"product               = {report.product.value} "
              f"({report.product.to_hex()})")
        print(f"baseline cycles       = {report.baseline_cycles} "
              f"(shift-and-add, one per multiplier bit)")
        print(f"reformed digit cycles = {report.reformed_digit_cycles} "
              f"({cfg.k} bits per cycle)")
        print(f"reformed total cycles = {report.reformed_cycles} "
              f"(flush included)")
        print(f"speedup (total)       = {report.speedup:.2f}x")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="radixmul",
        description="Cycle-accurate digit-serial unsigned binary multiplier simulator",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_mul = sub.add_parser("mul", help="multiply two operands, optionally dumping the trace")
    p_mul.add_argument("--a", required=True, help="multiplicand (decimal, 0x hex, or bin: binary)")
    p_mul.add_argument("--b", required=True, help="multiplier (same formats)")
    _add_config_args(p_mul)
    p_mul.add_argument("--trace", metavar="PATH", help="write the JSON trace to PATH")
    p_mul.add_argument("--json", action="store_true", help="print the JSON trace to stdout")
    p_mul.set_defaults(func=_cmd_mul)

    p_verify = sub.add_parser("verify", help="check oracle/shift-add/simulator agreement")
    mode = p_verify.add_mutually_exclusive_group(required=True)
    mode.add_argument("--exhaustive", action="store_true",
                      help=f"all operand pairs (n <= {EXHAUSTIVE_MAX_N})")
    mode.add_argument("--random", type=int, metavar="COUNT",
                      help="COUNT seeded random pairs")
    p_verify.add_argument("--seed", type=int, default=None,
                          help=f"PRNG seed (falls back to ${SEED_ENV_VAR}, then entropy)")
    _add_config_args(p_verify)
    p_verify.add_argument("--json", action="store_true", help="machine-readable summary")
    p_verify.set_defaults(func=_cmd_verify)

    p_sweep = sub.add_parser("sweep", help="cycle counts and table sizes across digit widths")
    p_sweep.add_argument("--n", type=int, default=DEFAULT_OPERAND_BITS,
                         help="operand width in bits (default 16)")
    p_sweep.add_argument("--k", default=str(DEFAULT_DIGIT_BITS),
                         help="digit width or range, e.g. 3 or 1..4")
    p_sweep.add_argument("--json", action="store_true", help="machine-readable rows")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_cmp = sub.add_parser("compare", help="baseline vs digit-serial on one operand pair")
    p_cmp.add_argument("--a", required=True, help="multiplicand")
    p_cmp.add_argument("--b", required=True, help="multiplier")
    _add_config_args(p_cmp)
    p_cmp.add_argument("--json", action="store_true", help="machine-readable report")
    p_cmp.set_defaults(func=_cmd_compare)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ProductMismatchError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
