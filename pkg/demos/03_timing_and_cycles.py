# Cycle and wall-time accounting at the 16-bit reference configuration:
# 3-bit digits, a 25-line central adder, 40 ns clock, 30 ns load delay.
# The multiplier operand alone decides the early-stop runtime.

import pathlib
import sys

sys.path.insert(0, str(pathlib.Path(__file__).resolve().parents[1] / "src"))

from radixmul import FlushPolicy, SimConfig, Word, compare, simulate

full = SimConfig(n=16)
early = SimConfig(n=16, flush_policy=FlushPolicy.EARLY_STOP)
print(f"config: n={full.n} k={full.k} adder_width={full.adder_width} "
      f"clock={full.clock_period_ns:g}ns load={full.load_delay_ns:g}ns")
print()

cases = [
    ("all ones x all ones", 0xFFFF, 0xFFFF),
    ("alternating bits", 0x5555, 0x5555),
    ("sparse multiplier", 0x5555, 0x0170),
    ("zero multiplier", 0x1234, 0x0000),
]

print("case                      a       b      product  full  early  time_full")
for label, av, bv in cases:
    a, b = Word(av, 16), Word(bv, 16)
    rf = simulate(a, b, full)
    re = simulate(a, b, early)
    assert rf.product.value == re.product.value == av * bv
    print(f"{label:<22s}  0x{av:04x}  0x{bv:04x}  {rf.product.value:11d}  "
          f"{rf.cycles:4d}  {re.cycles:5d}  {rf.total_time_ns:6g} ns")
print()

report = compare(Word(0xFFFF, 16), Word(0xFFFF, 16), full)
print(f"shift-and-add baseline: {report.baseline_cycles} cycles")
print(f"digit-serial total:     {report.reformed_cycles} cycles "
      f"({report.reformed_digit_cycles} digit + "
      f"{report.reformed_cycles - report.reformed_digit_cycles} flush)")
print(f"speedup:                {report.speedup:.2f}x")
