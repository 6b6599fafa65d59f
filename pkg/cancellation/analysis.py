import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from sympy import isprime

from .enumeration import count_bound, structured_solutions
from .exceptions import BaseError, WidthError
from .generator import TupleClass, blocks_from_tuple, classify_tuple, reduce_fully
from .predicate import has_property_P_star


logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SaturationBound:
    """max{5, 2 log2(B - 1) + 2}, as a float for display and as an exact ceiling."""

    base: int
    value: float
    ceiling: int


@dataclass(frozen=True)
class KCount:
    k: int
    solutions: int
    primitives: int


@dataclass(frozen=True)
class SaturationReport:
    base: int
    k_max: int
    bound: SaturationBound
    counts_by_k: tuple
    primitives_by_k: dict
    last_new_primitive_k: int = None
    evaluations: int = field(default=0, compare=False)

    @property
    def max_count(self):
        return max((row.solutions for row in self.counts_by_k), default=0)

    @property
    def bound_ratio(self):
        """Largest observed count over (B - 2)(B - 3)/2, or None when that bound is 0."""
        bound = count_bound(self.base)
        return Fraction(self.max_count, bound) if bound else None

    @property
    def within_bound(self):
        if self.last_new_primitive_k is None:
            return True
        return self.last_new_primitive_k <= self.bound.ceiling


@dataclass(frozen=True)
class StructureAudit:
    """
    The digit constraints every solution of P*_k obeys, with the measured values:
    a_1 < B/2; b = c_1 = ... = c_(k-1) > c_k > 1; gcd(c_k, B) > 1; and
    gcd(a_k - b, B) > 1 unless a_k == b. leading_block_ok checks a < B^k / 2.
    """

    number: object
    a1: int
    b: int
    ck: int
    ak: int
    gcd_ck: int
    gcd_ak_b: int
    leading_digit_ok: bool
    last_block_ok: bool
    ck_gcd_ok: bool
    ak_gcd_ok: bool
    leading_block_ok: bool

    @property
    def ok(self):
        return (
            self.leading_digit_ok
            and self.last_block_ok
            and self.ck_gcd_ok
            and self.ak_gcd_ok
            and self.leading_block_ok
        )


@dataclass(frozen=True)
class ProbeVerdict:
    base: int
    is_prime: bool
    witness: object = None
    evaluations: int = field(default=0, compare=False)


@dataclass(frozen=True)
class ConsecutiveScan:
    """
    Per k, whether new primitive solutions appeared, and every k at which none
    appeared although some did at k + 1.
    """

    base: int
    rows: tuple
    counterexamples: tuple

    @property
    def pattern_holds(self):
        return not self.counterexamples


class OnsetReason(str, Enum):
    NON_INTEGRAL = "non-integral"
    TOO_SHORT = "too-short"


@dataclass(frozen=True)
class GenerationOnset:
    b: int
    ck: int
    base: int
    k: int
    reason: OnsetReason = None


def saturation_bound(base):
    """
    The width max{5, 2 log2(B - 1) + 2} beyond which no new primitive solutions
    appear. The ceiling is exact: the smallest K with 2^(K - 2) >= (B - 1)^2.
    """
    if base < 2:
        raise BaseError(f"Base must be at least 2, got {base}.")

    value = max(5.0, 2 * math.log2(base - 1) + 2)
    ceiling = max(5, 2 + ((base - 1) ** 2 - 1).bit_length())
    return SaturationBound(base, value, ceiling)


def empirical_saturation(base, k_max, jobs=1):
    """
    Run the structured engine for k = 1 ... k_max and record where primitive
    solutions (those reduce cannot shorten) appear.

    Args:
        base (int): The base B.
        k_max (int): The largest width scanned.
        jobs (int): Worker processes handed to the engine.

    Returns:
        SaturationReport
    """
    if k_max < 1:
        raise WidthError(f"k_max must be at least 1, got {k_max}.")

    counts = []
    primitives_by_k = {}
    last_new = None
    evaluations = 0
    for k in range(1, k_max + 1):
        solutions = structured_solutions(base, k, jobs=jobs)
        primitives = tuple(solutions.primitives)
        counts.append(KCount(k, len(solutions), len(primitives)))
        primitives_by_k[k] = primitives
        evaluations += solutions.evaluations
        if primitives:
            last_new = k

    report = SaturationReport(
        base=base,
        k_max=k_max,
        bound=saturation_bound(base),
        counts_by_k=tuple(counts),
        primitives_by_k=primitives_by_k,
        last_new_primitive_k=last_new,
        evaluations=evaluations,
    )
    if k_max >= report.bound.ceiling and not report.within_bound:
        logger.error(
            "Base %s has a new primitive solution at k=%s, beyond the saturation bound %s.",
            base, last_new, report.bound.ceiling,
        )
    return report


def audit_number(n):
    """Evaluate the structure constraints for one solution with l == k."""
    if n.width_l != n.width_k:
        raise WidthError(f"The structure audit needs l == k, got {n}.")

    B = n.base
    digits_a, digits_c = n.digits_a, n.digits_c
    a1, ak, b, ck = digits_a[0], digits_a[-1], n.digit_b, digits_c[-1]
    gcd_ak_b = math.gcd(ak - b, B) if ak != b else None

    audit = StructureAudit(
        number=n,
        a1=a1,
        b=b,
        ck=ck,
        ak=ak,
        gcd_ck=math.gcd(ck, B),
        gcd_ak_b=gcd_ak_b,
        leading_digit_ok=2 * a1 < B,
        last_block_ok=all(digit == b for digit in digits_c[:-1]) and b > ck > 1,
        ck_gcd_ok=math.gcd(ck, B) > 1,
        ak_gcd_ok=gcd_ak_b is None or gcd_ak_b > 1,
        leading_block_ok=2 * n.block_a < B**n.width_k,
    )
    if not audit.ok:
        logger.error("Structure constraints violated by %s: %s", n, audit)
    return audit


def audit_structure(solutions):
    """Audit every member of a SolutionSet; all must have l == k."""
    return [audit_number(number) for number in solutions]


def prime_power_audit(p, n, k, jobs=1):
    """
    Check that in base p^n every solution of P*_k is an extension of a solution
    of P*_1: it reduces k - 1 times to one, its digits are [a_1 b ... b c_k],
    and p divides c_k.

    Raises:
        BaseError: If p is not prime or n < 2.
    """
    if n < 2 or not isprime(p):
        raise BaseError(f"The prime-power audit needs a prime p and n >= 2, got p={p}, n={n}.")

    base = p**n
    holds = True
    for number in structured_solutions(base, k, jobs=jobs):
        root, steps = reduce_fully(number)
        b = number.digit_b
        checks = {
            "reduces to P*_1": steps == k - 1 and root.width_k == 1 and has_property_P_star(root),
            "inner digits equal b": all(digit == b for digit in number.digits_a[1:] + number.digits_c[:-1]),
            "p divides c_k": number.digits_c[-1] % p == 0,
        }
        for name, passed in checks.items():
            if not passed:
                logger.error("Base %s: %s fails '%s'.", base, number, name)
                holds = False
    return holds


def primality_probe(base):
    """
    Look for a solution of P*_1 with b = B - 1. Composite bases always have one,
    prime bases never do.

    Returns:
        ProbeVerdict: is_prime, and the first witness found for a composite base.
    """
    if base < 2:
        raise BaseError(f"Base must be at least 2, got {base}.")

    evaluations = 0
    for ck in range(2, base - 1):
        evaluations += 1
        blocks = blocks_from_tuple(base - 1, ck, base, 1)
        if blocks is not None:
            return ProbeVerdict(base, False, blocks.to_number(), evaluations)
    return ProbeVerdict(base, True, None, evaluations)


def consecutive_saturation_scan(base, k_max, jobs=1, report=None):
    """
    Check the observation that once a width brings no new primitive solutions,
    the next width brings none either. Counterexamples are reported, not assumed
    away.

    Args:
        report (SaturationReport, optional): A report already computed for
            (base, k_max), reused instead of rescanning.
    """
    if k_max < 2:
        raise WidthError(f"k_max must be at least 2, got {k_max}.")

    if report is None:
        report = empirical_saturation(base, k_max, jobs=jobs)

    rows = tuple((row.k, row.primitives > 0) for row in report.counts_by_k)
    counterexamples = tuple(
        k for (k, new), (_, new_next) in zip(rows, rows[1:]) if not new and new_next
    )
    if counterexamples:
        logger.info(
            "Base %s: new primitive solutions reappear after a quiet width at k=%s.",
            base, list(counterexamples),
        )
    return ConsecutiveScan(base, rows, counterexamples)


def generation_onset(b, ck, base, k_max):
    """
    The first width at which (b, ck) generates a full solution, and why it did
    not one width earlier: the fraction b*ck*B^(k-2)/(bB - (B-1)ck) was not an
    integer, or the block a was too short. Returns None if there is no onset up
    to k_max.
    """
    previous = None
    for k in range(1, k_max + 1):
        cell = classify_tuple(b, ck, base, k)
        if cell.kind is TupleClass.FULL_SOLUTION:
            if previous is None:
                reason = None
            elif previous.kind is TupleClass.SHORT_SOLUTION:
                reason = OnsetReason.TOO_SHORT
            else:
                reason = OnsetReason.NON_INTEGRAL
            return GenerationOnset(b, ck, base, k, reason)
        previous = cell
    return None
