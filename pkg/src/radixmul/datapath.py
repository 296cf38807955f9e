"""Behavioral models of the multiplier's hardware blocks.

Covers the initial-adder ladder that precomputes odd multiples of the
multiplicand, the digit decomposition that drives the multiplexer and
barrel-shifter controls, the 3:2 carry-save compression, the
ripple-carry completion, and the composed central-adder step that
emits k product bits per cycle and feeds the rest back.

No native multiplication happens anywhere in this module: multiples
come only from shifting and adding, exactly as the modeled circuit
builds them.
"""

from typing import NamedTuple

from .word import (
    Digit,
    Word,
    WidthMismatchError,
    WidthOverflowError,
    add,
    resize,
    shift_left,
)


class ControlError(ValueError):
    """Mux or shifter control inputs that no digit can legally produce."""


class AdderSizingError(WidthOverflowError):
    """The configured adder width cannot hold an intermediate result."""


class DigitDecomposition(NamedTuple):
    """A digit factored as odd_core * 2^shift.

    odd_core is the mux selection (0 picks the constant-zero line) and
    shift is the barrel-shifter count; for 3-bit digits this reproduces
    the selection/shift table verbatim: 6 selects the 3x entry shifted
    once, 4 selects the 1x entry shifted twice, odd digits shift by 0.
    """

    odd_core: int
    shift: int


def _odd_shift(value: int) -> tuple[int, int]:
    # factor value = core << shift with core odd; 0 stays (0, 0)
    if value == 0:
        return 0, 0
    shift = (value & -value).bit_length() - 1
    return value >> shift, shift


def decompose_digit(d: Digit) -> DigitDecomposition:
    """Split a digit into its odd core and trailing-zero shift count."""
    core, shift = _odd_shift(d.value)
    return DigitDecomposition(core, shift)


class MultipleTable:
    """Odd multiples of the multiplicand, as the initial adders build them.

    Only odd multiples are stored; every even multiple is an odd entry
    shifted left, which the barrel shifter supplies later. Entries are
    width(A) + k bits wide, enough for any multiple up to (2^k - 1)*A.
    The constant-zero mux line is carried as ``zero``.
    """

    __slots__ = ("k", "width", "entries", "zero", "ladder_adds", "ladder_shifts")

    def __init__(self, k: int, width: int, entries: dict[int, Word],
                 ladder_adds: int, ladder_shifts: int):
        self.k = k
        self.width = width
        self.entries = entries
        self.zero = Word(0, width)
        self.ladder_adds = ladder_adds
        self.ladder_shifts = ladder_shifts

    def __len__(self) -> int:
        return len(self.entries)

    def __repr__(self) -> str:
        pairs = ", ".join(f"{m}: {w.value}" for m, w in sorted(self.entries.items()))
        return f"MultipleTable(k={self.k}, {{{pairs}}})"


def build_multiple_table(a: Word, k: int) -> MultipleTable:
    """Run the initial-adder ladder over the multiplicand.

    Even multiples are shifts of smaller entries and each odd multiple
    is the preceding even one plus A, so for k=3 the order is exactly
    2A = A<<1, 3A = 2A+A, 4A = A<<2, 5A = 4A+A, 6A = 3A<<1, 7A = 6A+A.
    Only shift_left and add are used; the per-build operation counts
    are kept on the table so tests can assert no other route was taken.
    """
    if k < 1:
        raise ValueError(f"digit width must be positive, got {k}")
    width = a.width + k
    base = resize(a, width)
    entries = {1: base}
    adds = shifts = 0
    for m in range(3, 1 << k, 2):
        core, s = _odd_shift(m - 1)
        even = shift_left(entries[core], s, width)
        shifts += 1
        entries[m] = add(even, base, width)
        adds += 1
    return MultipleTable(k, width, entries, adds, shifts)


def mux_select(table: MultipleTable, odd_core: int) -> Word:
    """Pick the precomputed multiple for a decomposed digit.

    Selection 0 routes the constant-zero line; anything even or outside
    the table indicates broken control logic, not a data condition.
    """
    if odd_core == 0:
        return table.zero
    entry = table.entries.get(odd_core)
    if entry is None:
        raise ControlError(f"no mux input for selection {odd_core}")
    return entry


def barrel_shift(w: Word, shift: int, k: int) -> Word:
    """Shift left by up to k-1 positions in a single step, widening to match."""
    if not 0 <= shift < k:
        raise ControlError(f"shift {shift} out of range for {k}-bit digits")
    return shift_left(w, shift, w.width + k - 1)


class CsaResult(NamedTuple):
    """Redundant-form output of one 3:2 compression."""

    sum: Word
    carry: Word


def csa(x: Word, y: Word, z: Word) -> CsaResult:
    """Carry-save 3:2 compression: bitwise sum and majority carry.

    No carry propagates; the identity sum + 2*carry = x + y + z holds
    exactly.
    """
    if not (x.width == y.width == z.width):
        raise WidthMismatchError(
            f"csa widths differ: {x.width}, {y.width}, {z.width}"
        )
    xv, yv, zv = x.value, y.value, z.value
    s = xv ^ yv ^ zv
    c = (xv & yv) | (yv & zv) | (xv & zv)
    return CsaResult(Word(s, x.width), Word(c, x.width))


def rca(x: Word, y: Word, carry_in: int = 0) -> tuple[Word, int]:
    """Ripple-carry addition resolving a redundant form into one word.

    Carries advance one bit position per loop iteration until none
    remain, which is the ripple behavior; only boolean operations are
    used, never a native addition, so the oracle tests against integer
    arithmetic are meaningful.
    """
    if x.width != y.width:
        raise WidthMismatchError(f"rca widths differ: {x.width}, {y.width}")
    if carry_in not in (0, 1):
        raise ValueError(f"carry_in must be a bit, got {carry_in}")
    width = x.width
    xv, yv = x.value, y.value
    s = xv ^ yv ^ carry_in
    carry = ((xv & yv) | (carry_in & (xv | yv))) << 1
    while carry:
        s, carry = s ^ carry, (s & carry) << 1
    return Word(s & ((1 << width) - 1), width), s >> width


_zero_words: dict[int, Word] = {}


def _zero(width: int) -> Word:
    w = _zero_words.get(width)
    if w is None:
        w = _zero_words[width] = Word(0, width)
    return w


def central_adder_step(residue: Word, pp: Word, k: int,
                       adder_width: int) -> tuple[Digit, Word]:
    """One accumulation cycle of the central adder.

    The fed-back residue and the cycle's partial product go through the
    CSA stage, the RCA resolves sum and carry into one word, the k low
    bits are emitted to the output registers, and the remaining high
    bits become the next residue. Any overflow of the adder width is a
    sizing error: the modeled adder has too few input lines.
    """
    try:
        r = resize(residue, adder_width)
        p = resize(pp, adder_width)
    except WidthOverflowError as exc:
        raise AdderSizingError(str(exc)) from None
    compressed = csa(r, p, _zero(adder_width))
    carry = compressed.carry
    if carry.value >> (adder_width - 1):
        raise AdderSizingError(
            f"carry word overflows the {adder_width}-bit adder"
        )
    total, carry_out = rca(compressed.sum, shift_left(carry, 1, adder_width))
    if carry_out:
        raise AdderSizingError(
            f"residue + partial product overflows the {adder_width}-bit adder"
        )
    emitted = Digit(total.value & ((1 << k) - 1), k)
    return emitted, Word(total.value >> k, adder_width)
