import logging
from dataclasses import dataclass
from enum import Enum

from sympy import divisors

from .digits import assemble, digit_count
from .exceptions import (
    BaseError,
    NotASolutionError,
    TupleRangeError,
    WidthError,
)
from .predicate import has_property_P, has_property_P_star


logger = logging.getLogger(__name__)


class TupleClass(str, Enum):
    NON_GENERATING = "none"
    FULL_SOLUTION = "full"
    SHORT_SOLUTION = "short"


@dataclass(frozen=True)
class DerivedBlocks:
    """
    The blocks a generating tuple (b, ck) yields at width k:
    c = bM + ck with M = (B^k - B)/(B - 1), and a * (bB - (B - 1)ck) == b * c.
    """

    base: int
    width_k: int
    b: int
    ck: int
    M: int
    a: int
    c: int

    @property
    def width_l(self):
        return digit_count(self.a, self.base)

    def to_number(self):
        return assemble(self.a, self.b, self.c, self.base, self.width_l, self.width_k)


@dataclass(frozen=True)
class GeneratingTuple:
    """
    A cell (b, ck) of the tuple grid.

    integral records whether the closed form for a divides exactly; block_a and
    width_l are only set once the candidate has also passed the predicate.
    """

    b: int
    ck: int
    kind: TupleClass
    integral: bool
    block_a: int = None
    width_l: int = None


def _check_tuple(b, ck, base, k):
    if not 1 < ck < b < base:
        raise TupleRangeError(
            f"Tuple (b={b}, ck={ck}) violates 1 < ck < b < {base}."
        )
    if k < 1:
        raise WidthError(f"Width k must be at least 1, got {k}.")


def _exact_div(numerator, denominator):
    quotient, remainder = divmod(numerator, denominator)
    return None if remainder else quotient


def _closed_form(b, ck, base, k):
    """
    Evaluate a = bM/B + b*ck*B^(k-1)/(bB - (B-1)ck) and c = bM + ck.
    a is None when either division is not exact.
    """
    M = (base**k - base) // (base - 1)
    c = b * M + ck
    denominator = b * base - (base - 1) * ck

    head = _exact_div(b * M, base)
    tail = _exact_div(b * ck * base ** (k - 1), denominator)
    if head is None or tail is None:
        return M, None, c
    return M, head + tail, c


def _verified_blocks(b, ck, base, k, M, a, c):
    if a is None or a <= 0:
        return None

    blocks = DerivedBlocks(base, k, b, ck, M, a, c)
    if blocks.width_l > k or not has_property_P_star(blocks.to_number()):
        logger.warning(
            "Tuple (b=%s, ck=%s) in base %s, k=%s is integral but fails verification.",
            b, ck, base, k,
        )
        return None
    return blocks


def blocks_from_tuple(b, ck, base, k):
    """
    Build the solution a generating tuple determines, if there is one.

    Args:
        b (int): The central digit.
        ck (int): The last digit of the trailing block.
        base (int): The base B.
        k (int): Width of the trailing block.

    Returns:
        DerivedBlocks or None: The blocks, only when a is a positive integer and
        the assembled number passes has_property_P_star.

    Raises:
        TupleRangeError: If the tuple violates 1 < ck < b < B.
    """
    _check_tuple(b, ck, base, k)
    return _verified_blocks(b, ck, base, k, *_closed_form(b, ck, base, k))


def classify_tuple(b, ck, base, k):
    """
    Classify (b, ck) at width k: FULL_SOLUTION when the verified block a has k
    digits, SHORT_SOLUTION when it has fewer, NON_GENERATING otherwise.
    """
    _check_tuple(b, ck, base, k)
    M, a, c = _closed_form(b, ck, base, k)
    blocks = _verified_blocks(b, ck, base, k, M, a, c)

    if blocks is None:
        return GeneratingTuple(b, ck, TupleClass.NON_GENERATING, integral=a is not None)

    if blocks.a >= base ** (k - 1):
        kind = TupleClass.FULL_SOLUTION
    else:
        kind = TupleClass.SHORT_SOLUTION
    return GeneratingTuple(b, ck, kind, integral=True, block_a=blocks.a, width_l=blocks.width_l)


def extend(n):
    """
    Replace the central digit b by [b b b], carrying a solution of P_{l;k} to
    one of P_{l+1;k+1}.

    Raises:
        WidthError: If a is 0 while b is not, since the extension would start
            with a zero digit.
    """
    B, b = n.base, n.digit_b
    if n.block_a == 0 and b != 0:
        raise WidthError(f"Cannot extend {n}: its leading block is empty.")
    return assemble(
        n.block_a * B + b,
        b,
        b * B**n.width_k + n.block_c,
        B,
        n.width_l + 1,
        n.width_k + 1,
    )


def reduce(n):
    """
    Undo extend: if a_l == b == c_1, drop those two digits.

    Returns:
        CancellationNumber or None: The reduced number, or None when the number
        is not an extension (including when either width is below 2).
    """
    if n.width_l < 2 or n.width_k < 2:
        return None

    B, b, k = n.base, n.digit_b, n.width_k
    head, last_a = divmod(n.block_a, B)
    first_c, tail = divmod(n.block_c, B ** (k - 1))
    if not last_a == b == first_c:
        return None
    return assemble(head, b, tail, B, n.width_l - 1, k - 1)


def reduce_fully(n):
    """
    Apply reduce until it yields nothing.

    Returns:
        tuple: The primitive ancestor and the number of reductions applied.
    """
    steps = 0
    while (reduced := reduce(n)) is not None:
        n = reduced
        steps += 1
    return n, steps


def strip_trailing_zero(n):
    """
    Drop a trailing zero digit of c, carrying a solution of P_{l;k} to one of
    P_{l;k-1}. Returns None when c_k is not 0.

    Raises:
        WidthError: If c_k is 0 but the trailing block has a single digit.
    """
    if not has_property_P(n):
        raise NotASolutionError(f"{n} does not have property P.")

    c, last = divmod(n.block_c, n.base)
    if last:
        return None
    if n.width_k < 2:
        raise WidthError(f"Cannot strip a digit from a trailing block of width {n.width_k}.")
    return assemble(n.block_a, n.digit_b, c, n.base, n.width_l, n.width_k - 1)


def composite_family(base, k):
    """
    The solutions (mB^(k-1) - 1, B - 1, B^k - n) for every ordered factorisation
    B = m * n with m, n > 1, sorted by value. Empty exactly when B is prime.
    """
    if base < 2:
        raise BaseError(f"Base must be at least 2, got {base}.")
    if k < 1:
        raise WidthError(f"Width k must be at least 1, got {k}.")

    family = []
    for m in divisors(base):
        if not 1 < m < base:
            continue
        a = m * base ** (k - 1) - 1
        number = assemble(a, base - 1, base**k - base // m, base, digit_count(a, base), k)
        if not has_property_P_star(number):
            raise NotASolutionError(f"Family member {number} fails the predicate.")
        family.append(number)
    return family


def largest_solution(base, k):
    """
    The largest solution of P*_k in an even base:
    (B^k/2 - 1, B - 1, B^k - 2).
    """
    if base % 2 or base < 4:
        raise BaseError(f"The largest solution is only defined for even bases from 4, got {base}.")
    if k < 1:
        raise WidthError(f"Width k must be at least 1, got {k}.")

    number = assemble(base**k // 2 - 1, base - 1, base**k - 2, base, k, k)
    if not has_property_P_star(number):
        raise NotASolutionError(f"{number} fails the predicate.")
    return number


def involution(n):
    """
    Map a non-trivial solution (a, b, c) of P*_1 to (b - c, b, b - a).

    Raises:
        WidthError: If the number is not a three-digit N_{1;1}.
        NotASolutionError: If it is not a non-trivial solution.
    """
    if n.width_l != 1 or n.width_k != 1:
        raise WidthError(f"The involution acts on N_{{1;1}} only, got {n}.")
    if not has_property_P_star(n):
        raise NotASolutionError(f"{n} is not a non-trivial solution.")

    a, b, c = n.blocks
    return assemble(b - c, b, b - a, n.base, 1, 1)
