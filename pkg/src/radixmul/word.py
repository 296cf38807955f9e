"""Fixed-width unsigned bit vectors with LSB-first indexing.

Every operand, multiple and residue in the simulator is a Word: an
unsigned value pinned to an explicit bit width, with bit 0 being the
rightmost (least significant) bit. Overflow is always a hard error,
never a silent wraparound, so that sizing bugs in the modeled datapath
surface immediately instead of being masked.

Binary text is printed and parsed MSB-first, matching how humans write
binary literals; the string is reversed relative to the bit indexing.
"""


class WidthOverflowError(ValueError):
    """A value does not fit the declared bit width."""


class WidthMismatchError(ValueError):
    """Operands of different widths were combined."""


class Word:
    """Unsigned value pinned to a bit width; treat instances as immutable."""

    __slots__ = ("value", "width")

    def __init__(self, value: int, width: int):
        if width < 1:
            raise ValueError(f"width must be positive, got {width}")
        if value < 0 or value >> width:
            raise WidthOverflowError(f"value {value} does not fit in {width} bits")
        self.value = value
        self.width = width

    def bit(self, i: int) -> int:
        """Bit at position i, where position 0 is the LSB."""
        if not 0 <= i < self.width:
            raise IndexError(f"bit {i} out of range for width {self.width}")
        return (self.value >> i) & 1

    def bits(self) -> tuple[int, ...]:
        """All bits, LSB first."""
        return tuple((self.value >> i) & 1 for i in range(self.width))

    def to_bin(self) -> str:
        """MSB-first binary string, zero-padded to the full width."""
        return format(self.value, f"0{self.width}b")

    def to_hex(self) -> str:
        return f"0x{self.value:x}"

    def __int__(self) -> int:
        return self.value

    def __eq__(self, other) -> bool:
        if not isinstance(other, Word):
            return NotImplemented
        return self.value == other.value and self.width == other.width

    def __hash__(self) -> int:
        return hash((self.value, self.width))

    def __repr__(self) -> str:
        return f"Word(0b{self.to_bin()}, width={self.width})"


class Digit:
    """A k-bit chunk of the multiplier, consumed one per clock cycle."""

    __slots__ = ("value", "k")

    def __init__(self, value: int, k: int):
        if k < 1:
            raise ValueError(f"digit width must be positive, got {k}")
        if value < 0 or value >> k:
            raise WidthOverflowError(f"digit value {value} does not fit in {k} bits")
        self.value = value
        self.k = k

    def __eq__(self, other) -> bool:
        if not isinstance(other, Digit):
            return NotImplemented
        return self.value == other.value and self.k == other.k

    def __hash__(self) -> int:
        return hash((self.value, self.k))

    def __repr__(self) -> str:
        return f"Digit(0b{format(self.value, f'0{self.k}b')}, k={self.k})"


def word_from_uint(value: int, width: int) -> Word:
    """Construct a Word, rejecting values that do not fit the width."""
    return Word(value, width)


def resize(w: Word, width: int) -> Word:
    """Same value at a new width; raises if the value no longer fits."""
    if width == w.width:
        return w
    return Word(w.value, width)


def shift_left(w: Word, s: int, out_width: int) -> Word:
    """Logical left shift: s zeros appear after the rightmost bit.

    The result is placed in an out_width register; overflowing it is a
    design bug, not a recoverable condition.
    """
    if s < 0:
        raise ValueError(f"shift count must be non-negative, got {s}")
    v = w.value << s
    if v >> out_width:
        raise WidthOverflowError(
            f"{w.value} << {s} does not fit in {out_width} bits"
        )
    return Word(v, out_width)


def add(x: Word, y: Word, out_width: int) -> Word:
    """Exact unsigned sum in an out_width register (reference adder)."""
    v = x.value + y.value
    if v >> out_width:
        raise WidthOverflowError(
            f"{x.value} + {y.value} does not fit in {out_width} bits"
        )
    return Word(v, out_width)


def split_digits(b: Word, k: int) -> list[Digit]:
    """Chop a word into k-bit digits, LSB digit first.

    The word is implicitly padded with zeros at the MSB end up to the
    next multiple of k, so a 16-bit multiplier split into 3-bit digits
    yields 6 of them. Recomposition sum(digit_i * 2^(i*k)) recovers the
    original value.
    """
    if k < 1:
        raise ValueError(f"digit width must be positive, got {k}")
    count = -(-b.width // k)
    mask = (1 << k) - 1
    return [Digit((b.value >> (i * k)) & mask, k) for i in range(count)]


def parse_binary(text: str) -> int:
    """MSB-first '0'/'1' string to an unsigned value (underscores allowed)."""
    t = text.strip().replace("_", "")
    if not t or any(c not in "01" for c in t):
        raise ValueError(f"not a binary string: {text!r}")
    return int(t, 2)


def parse_uint(text: str) -> int:
    """Operand literal: 'bin:' MSB-first binary, '0x' hexadecimal, else decimal."""
    t = text.strip()
    if t.lower().startswith("bin:"):
        return parse_binary(t[4:])
    try:
        value = int(t, 16) if t.lower().startswith("0x") else int(t, 10)
    except ValueError:
        raise ValueError(f"not an operand literal: {text!r}") from None
    if value < 0:
        raise ValueError(f"operand must be unsigned: {text!r}")
    return value


def parse_word(text: str, width: int) -> Word:
    """Parse an operand literal and pin it to a width.

    Binary literals shorter than the width are zero-extended; values
    that exceed the width are rejected.
    """
    return Word(parse_uint(text), width)
