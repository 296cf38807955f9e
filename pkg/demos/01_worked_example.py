# Multiply two 6-bit numbers the way the modeled hardware does, printing
# what every clock cycle consumed, selected, shifted, added and emitted.

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from radixmul import FlushPolicy, SimConfig, Word, simulate

a = Word(13, 6)   # 001101
b = Word(63, 6)   # 111111

print(f"A = {a.to_bin()} ({a.value})")
print(f"B = {b.to_bin()} ({b.value})")
print()

cfg = SimConfig(n=6, k=3, flush_policy=FlushPolicy.EARLY_STOP)
res = simulate(a, b, cfg)

print("cycle  digit  odd_core  shift  partial_product  residue_in  emitted  residue_out")
for r in res.trace:
    digit = "-" if r.digit is None else format(r.digit, "03b")
    print(f"{r.cycle:5d}  {digit:>5}  {r.odd_core:8d}  {r.shift:5d}  "
          f"{r.pp:15d}  {r.residue_before:10d}  {format(r.emitted, '03b'):>7}  "
          f"{r.residue_after:11d}")

print()
print(f"product  = {res.product.to_bin()} = {res.product.value}")
print(f"native   = {a.value * b.value}")
print(f"cycles   = {res.cycles} ({res.digit_cycles} digit + "
      f"{res.cycles - res.digit_cycles} flush)")
print(f"time     = {res.total_time_ns:g} ns "
      f"({cfg.load_delay_ns:g} ns load + {res.cycles} x {cfg.clock_period_ns:g} ns)")
