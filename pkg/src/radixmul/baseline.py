"""Reference multipliers and side-by-side comparison.

Two independent routes check the digit-serial simulator: the classical
one-bit-per-cycle shift-and-add multiplier, built from the same word
primitives, and a native wide-integer oracle. All three must agree on
every product.
"""

from dataclasses import dataclass

from .engine import SimConfig, simulate
from .word import Word, WidthMismatchError, add, shift_left


class ProductMismatchError(RuntimeError):
    """Two multiplier routes disagreed; a correctness bug, not an input error."""


def shift_add_multiply(a: Word, b: Word) -> tuple[Word, int]:
    """Classical shift-and-add: one cycle per multiplier bit, no flush phase.

    Each multiplier bit contributes either a copy of the multiplicand
    shifted by the bit's index or zero, accumulated as it goes.
    """
    if a.width != b.width:
        raise WidthMismatchError(
            f"operand widths differ: {a.width}, {b.width}"
        )
    n = a.width
    out_width = 2 * n
    zero = Word(0, out_width)
    acc = zero
    for i in range(n):
        pp = shift_left(a, i, out_width) if b.bit(i) else zero
        acc = add(acc, pp, out_width)
    return acc, n


def oracle_multiply(a: Word, b: Word) -> Word:
    """Ground truth by native wide-integer multiplication."""
    return Word(a.value * b.value, a.width + b.width)


@dataclass
class ComparisonReport:
    """Cycle counts of both multipliers on one operand pair.

    The reformed side reports both the digit-consuming cycles (one per
    k-bit chunk) and the total including flush, so either comparison
    basis is available; speedup uses the total.
    """

    a: Word
    b: Word
    product: Word
    baseline_cycles: int
    reformed_cycles: int
    reformed_digit_cycles: int
    speedup: float

    def to_dict(self) -> dict:
        return {
            "a": hex(self.a.value),
            "b": hex(self.b.value),
            "product": hex(self.product.value),
            "baseline_cycles": self.baseline_cycles,
            "reformed_cycles": self.reformed_cycles,
            "reformed_digit_cycles": self.reformed_digit_cycles,
            "speedup": self.speedup,
        }


def compare(a: Word, b: Word, cfg: SimConfig) -> ComparisonReport:
    """Run oracle, shift-and-add, and the digit-serial simulator.

    Any disagreement between the three products raises; the report
    carries the agreed product and both cycle counts.
    """
    expected = oracle_multiply(a, b)
    sa_product, sa_cycles = shift_add_multiply(a, b)
    sim = simulate(a, b, cfg)
    if not (expected.value == sa_product.value == sim.product.value):
        raise ProductMismatchError(
            f"a={a.to_hex()} b={b.to_hex()}: oracle={expected.to_hex()} "
            f"shift_add={sa_product.to_hex()} reformed={sim.product.to_hex()}"
        )
    return ComparisonReport(
        a=a,
        b=b,
        product=expected,
        baseline_cycles=sa_cycles,
        reformed_cycles=sim.cycles,
        reformed_digit_cycles=sim.digit_cycles,
        speedup=sa_cycles / sim.cycles,
    )
