from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .exceptions import NotASolutionError


class Triviality(str, Enum):
    NON_TRIVIAL = "non-trivial"
    ALL_DIGITS_EQUAL = "all-digits-equal"
    ZERO_BLOCKS = "zero-blocks"


@dataclass(frozen=True)
class TrivialityClass:
    """
    How a solution of P_{l;k} is (or is not) trivial.
    For ZERO_BLOCKS, zero_blocks names the vanishing blocks, e.g. ("b", "c").
    """

    kind: Triviality
    zero_blocks: tuple = ()

    @property
    def is_trivial(self):
        return self.kind is not Triviality.NON_TRIVIAL


@dataclass(frozen=True)
class DivisibilityReport:
    a_divides_bc: bool
    b_divides_ac_b_minus_1: bool
    c_divides_ab_bk: bool
    ratio_d: int = None

    @property
    def all_hold(self):
        return self.a_divides_bc and self.b_divides_ac_b_minus_1 and self.c_divides_ab_bk


def has_property_P(n):
    """
    Decide whether the central digit of N can be anomalously cancelled, i.e.
    whether [a b] * c == a * [b c], which is (aB + b)c == a(bB^k + c).

    Args:
        n (CancellationNumber): The number to test.

    Returns:
        bool: True if N has property P_{l;k}.
    """
    a, b, c = n.blocks
    B = n.base
    return (a * B + b) * c == a * (b * B**n.width_k + c)


def _require_solution(n):
    if not has_property_P(n):
        raise NotASolutionError(f"{n} does not have property P.")


def classify_triviality(n):
    """
    Classify a solution of P_{l;k} as trivial or not.

    Args:
        n (CancellationNumber): A number with property P_{l;k}.

    Returns:
        TrivialityClass: ZERO_BLOCKS when at least two blocks vanish,
        ALL_DIGITS_EQUAL for [dd...d] with l == k, NON_TRIVIAL otherwise.

    Raises:
        NotASolutionError: If n does not have property P.
    """
    _require_solution(n)

    zero_blocks = tuple(
        name for name, block in zip("abc", n.blocks) if block == 0
    )
    if len(zero_blocks) >= 2:
        return TrivialityClass(Triviality.ZERO_BLOCKS, zero_blocks)

    b = n.digit_b
    if n.width_l == n.width_k and all(digit == b for digit in n.digits_a + n.digits_c):
        return TrivialityClass(Triviality.ALL_DIGITS_EQUAL)

    return TrivialityClass(Triviality.NON_TRIVIAL)


def has_property_P_star(n):
    """True if N has property P_{l;k} non-trivially."""
    if not has_property_P(n):
        return False
    return not classify_triviality(n).is_trivial


def satisfies_fraction_form(n):
    """
    Check the fractional form 1/a + (B - 1)/b == B^k/c with exact rationals.
    Only defined when all three blocks are positive; returns False otherwise.
    """
    a, b, c = n.blocks
    if not (a and b and c):
        return False
    B = n.base
    return Fraction(1, a) + Fraction(B - 1, b) == Fraction(B**n.width_k, c)


def ratio_d(n):
    """
    The integer d = bc/a. None unless every block is positive and a | bc, so the
    degenerate d = 0 of a zero-block number is never reported.
    """
    a, b, c = n.blocks
    if not (a and b and c) or (b * c) % a:
        return None
    return b * c // a


def _divides(divisor, value):
    # A zero block divides vacuously: both sides of the rearranged identity are 0.
    return divisor == 0 or value % divisor == 0


def divisibility_report(n):
    """
    Report the divisibility facts every solution satisfies:
    a | bc, b | ac(B - 1) and c | abB^k.

    Raises:
        NotASolutionError: If n does not have property P.
    """
    _require_solution(n)
    a, b, c = n.blocks
    B = n.base
    return DivisibilityReport(
        a_divides_bc=_divides(a, b * c),
        b_divides_ac_b_minus_1=_divides(b, a * c * (B - 1)),
        c_divides_ab_bk=_divides(c, a * b * B**n.width_k),
        ratio_d=ratio_d(n),
    )
