from dataclasses import dataclass

from .exceptions import BlockError, DigitError, WidthError


def _check_base(base):
    if base < 2:
        raise DigitError(f"Base must be at least 2, got {base}.")


@dataclass(frozen=True)
class DigitString:
    """
    A base-B digit sequence, most significant digit first.
    Zero is the single digit [0].
    """

    base: int
    digits: tuple

    def __post_init__(self):
        _check_base(self.base)
        object.__setattr__(self, "digits", tuple(self.digits))
        if not self.digits:
            raise DigitError("A digit string must hold at least one digit.")
        for digit in self.digits:
            if not 0 <= digit < self.base:
                raise DigitError(f"Digit {digit} is outside [0, {self.base}).")

    def __len__(self):
        return len(self.digits)

    def __str__(self):
        return "[" + " ".join(str(digit) for digit in self.digits) + "]"


def concat(digits):
    """
    Evaluate a digit string positionally.

    Args:
        digits (DigitString): The digits x_1 ... x_k in base B.

    Returns:
        value (int): The sum of x_i * B^(k - i).
    """
    value = 0
    for digit in digits.digits:
        value = value * digits.base + digit
    return value


def to_digits(n, base, width=None):
    """
    Expand a non-negative integer into its base-B digits.

    Args:
        n (int): The value to expand.
        base (int): The base, at least 2.
        width (int, optional): Pad with leading zeros to exactly this many digits.

    Returns:
        digits (DigitString): Most significant digit first.
    """
    _check_base(base)
    if n < 0:
        raise DigitError(f"Cannot expand negative number {n}.")

    digits = []
    while n:
        n, digit = divmod(n, base)
        digits.append(digit)
    digits = digits[::-1] or [0]

    if width is not None:
        if len(digits) > width:
            raise WidthError(f"{len(digits)} digits do not fit in width {width}.")
        digits = [0] * (width - len(digits)) + digits

    return DigitString(base, digits)


def digit_count(n, base):
    """Number of base-B digits of n, counting zero as one digit."""
    return len(to_digits(n, base))


@dataclass(frozen=True)
class CancellationNumber:
    """
    The number N = [a b c] in base B, split into a leading block a of width_l
    digits, a central digit b and a trailing block c of width_k digits.
    """

    base: int
    block_a: int
    digit_b: int
    block_c: int
    width_l: int
    width_k: int

    def __post_init__(self):
        _check_base(self.base)
        if self.width_l < 1 or self.width_k < 1:
            raise WidthError(
                f"Block widths must be at least 1, got l={self.width_l}, k={self.width_k}."
            )
        if not 0 <= self.block_a < self.base**self.width_l:
            raise BlockError(f"Block a={self.block_a} does not fit in {self.width_l} digits.")
        if not 0 <= self.digit_b < self.base:
            raise BlockError(f"Digit b={self.digit_b} is outside [0, {self.base}).")
        if not 0 <= self.block_c < self.base**self.width_k:
            raise BlockError(f"Block c={self.block_c} does not fit in {self.width_k} digits.")
        # No phantom leading zero in a.
        if 0 < self.block_a < self.base ** (self.width_l - 1):
            raise BlockError(
                f"Block a={self.block_a} has a leading zero within {self.width_l} digits."
            )

    @property
    def value(self):
        return (
            self.block_a * self.base ** (self.width_k + 1)
            + self.digit_b * self.base**self.width_k
            + self.block_c
        )

    @property
    def digits_a(self):
        return to_digits(self.block_a, self.base, self.width_l).digits

    @property
    def digits_c(self):
        return to_digits(self.block_c, self.base, self.width_k).digits

    @property
    def digits(self):
        return DigitString(self.base, self.digits_a + (self.digit_b,) + self.digits_c)

    @property
    def blocks(self):
        return self.block_a, self.digit_b, self.block_c

    def __str__(self):
        return f"{self.digits} (base {self.base}, l={self.width_l}, k={self.width_k})"


def assemble(a, b, c, base, width_l, width_k):
    """
    Build N = a * B^(k + 1) + b * B^k + c from its blocks.

    Raises:
        BlockError: If a block does not fit the width allotted to it.
    """
    return CancellationNumber(base, a, b, c, width_l, width_k)


def disassemble(n, base, width_l, width_k):
    """
    Split a number with exactly l + k + 1 base-B digits into its blocks.

    Args:
        n (int): The number to split.
        base (int): The base.
        width_l (int): Digits allotted to the leading block a.
        width_k (int): Digits allotted to the trailing block c.

    Returns:
        number (CancellationNumber): The blocks of n.

    Raises:
        WidthError: If n does not have exactly l + k + 1 digits.
    """
    _check_base(base)
    expected = width_l + width_k + 1
    if not base ** (expected - 1) <= n < base**expected:
        raise WidthError(
            f"{n} does not have exactly {expected} digits in base {base}."
        )

    head, c = divmod(n, base**width_k)
    a, b = divmod(head, base)
    return assemble(a, b, c, base, width_l, width_k)
