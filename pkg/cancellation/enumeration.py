import logging
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .digits import assemble
from .exceptions import BaseError, WidthError, WorkLimitExceeded
from .generator import TupleClass, classify_tuple, reduce
from .predicate import has_property_P_star


logger = logging.getLogger(__name__)

DEFAULT_WORK_LIMIT = 10**9


@dataclass(frozen=True)
class SolutionSet:
    """
    The solutions of P*_{l;k} for one base, sorted by value, each flagged
    primitive when it is not an extension of a shorter solution.
    """

    base: int
    width_l: int
    width_k: int
    solutions: tuple
    primitive_flags: tuple
    evaluations: int = field(default=0, compare=False)

    @classmethod
    def from_numbers(cls, base, width_l, width_k, numbers, evaluations=0):
        solutions = tuple(sorted(numbers, key=lambda number: number.value))
        flags = tuple(reduce(number) is None for number in solutions)
        return cls(base, width_l, width_k, solutions, flags, evaluations)

    def __len__(self):
        return len(self.solutions)

    def __iter__(self):
        return iter(self.solutions)

    @property
    def values(self):
        return [number.value for number in self.solutions]

    @property
    def primitives(self):
        return [
            number
            for number, primitive in zip(self.solutions, self.primitive_flags)
            if primitive
        ]


@dataclass(frozen=True)
class TupleGrid:
    """Every generating tuple 1 < ck < b < B classified at width k."""

    base: int
    width_k: int
    cells: tuple
    evaluations: int = field(default=0, compare=False)

    def __len__(self):
        return len(self.cells)

    def cell(self, b, ck):
        for cell in self.cells:
            if (cell.b, cell.ck) == (b, ck):
                return cell
        raise KeyError((b, ck))

    def counts(self):
        """Cell count per TupleClass, every class present."""
        counter = Counter(cell.kind for cell in self.cells)
        return {kind: counter.get(kind, 0) for kind in TupleClass}

    @property
    def integral_count(self):
        return sum(cell.integral for cell in self.cells)


def _parallel_map(function, arguments, jobs):
    """
    Apply function to each argument tuple, in order. jobs > 1 spreads the calls
    over worker processes; the result order never depends on the schedule.
    """
    arguments = list(arguments)
    if jobs <= 1 or len(arguments) <= 1:
        return [function(*args) for args in arguments]
    with ProcessPoolExecutor(max_workers=jobs) as executor:
        return list(executor.map(function, *zip(*arguments)))


def count_bound(base):
    """At most (B - 2)(B - 3)/2 solutions of P*_k exist, for any k."""
    if base < 2:
        raise BaseError(f"Base must be at least 2, got {base}.")
    if base <= 3:
        return 0
    return (base - 2) * (base - 3) // 2


def _scan_leading_blocks(base, width_l, width_k, start, stop):
    """
    Check every (a, b, c) with start <= a < stop. Worker entry point of the
    oracle; returns the solution blocks found and the number of triples checked.
    """
    Bk = base**width_k
    found = []
    evaluations = 0
    for a in range(start, stop):
        for b in range(base):
            # (aB + b)c == a(bB^k + c), with the c terms collected on the left.
            step = a * base + b - a
            target = a * b * Bk
            for c in range(Bk):
                if step * c == target:
                    number = assemble(a, b, c, base, width_l, width_k)
                    if has_property_P_star(number):
                        found.append((a, b, c))
            evaluations += Bk
    return found, evaluations


def _partition(start, stop, parts):
    size, extra = divmod(stop - start, parts)
    bounds = []
    for index in range(parts):
        end = start + size + (index < extra)
        if end > start:
            bounds.append((start, end))
        start = end
    return bounds


def brute_force_solutions(base, width_l, width_k, work_limit=DEFAULT_WORK_LIMIT, jobs=1):
    """
    Find every solution of P*_{l;k} by checking all a, b and c.

    Args:
        base (int): The base B.
        width_l (int): Digits of the leading block a (leading digit non-zero).
        width_k (int): Digits of the trailing block c.
        work_limit (int): Largest number of predicate evaluations allowed.
        jobs (int): Number of worker processes.

    Returns:
        SolutionSet: The solutions, sorted by value.

    Raises:
        WorkLimitExceeded: If the scan needs more evaluations than work_limit.
    """
    if base < 2:
        raise BaseError(f"Base must be at least 2, got {base}.")
    if width_l < 1 or width_k < 1:
        raise WidthError(f"Widths must be at least 1, got l={width_l}, k={width_k}.")

    start, stop = base ** (width_l - 1), base**width_l
    required = (stop - start) * base * base**width_k
    if required > work_limit:
        logger.warning(
            "Refusing oracle scan of base %s, l=%s, k=%s: %s evaluations exceed the limit of %s.",
            base, width_l, width_k, required, work_limit,
        )
        raise WorkLimitExceeded(required, work_limit)

    logger.debug(
        "Oracle scan of base %s, l=%s, k=%s: %s evaluations on %s job(s).",
        base, width_l, width_k, required, jobs,
    )
    chunks = _partition(start, stop, max(1, jobs) * 4)
    results = _parallel_map(
        _scan_leading_blocks,
        [(base, width_l, width_k, lo, hi) for lo, hi in chunks],
        jobs,
    )

    numbers = [
        assemble(a, b, c, base, width_l, width_k)
        for found, _ in results
        for a, b, c in found
    ]
    evaluations = sum(count for _, count in results)
    return SolutionSet.from_numbers(base, width_l, width_k, numbers, evaluations)


def _classify_row(base, k, b):
    return [classify_tuple(b, ck, base, k) for ck in range(2, b)]


def _classify_all(base, k, jobs):
    rows = _parallel_map(_classify_row, [(base, k, b) for b in range(3, base)], jobs)
    return tuple(cell for row in rows for cell in row)


def _cell_number(cell, base, k):
    M = (base**k - base) // (base - 1)
    return assemble(cell.block_a, cell.b, cell.b * M + cell.ck, base, cell.width_l, k)


def structured_solutions(base, k, jobs=1):
    """
    Find every solution of P*_k by testing the generating tuples (b, ck).
    The work grows with B^2, not with B^k.

    Returns:
        SolutionSet: The solutions, sorted by value.
    """
    if base < 2:
        raise BaseError(f"Base must be at least 2, got {base}.")
    if k < 1:
        raise WidthError(f"Width k must be at least 1, got {k}.")

    cells = _classify_all(base, k, jobs)
    numbers = [
        _cell_number(cell, base, k)
        for cell in cells
        if cell.kind is TupleClass.FULL_SOLUTION
    ]
    logger.debug(
        "Structured scan of base %s, k=%s: %s tuples, %s solutions.",
        base, k, len(cells), len(numbers),
    )
    return SolutionSet.from_numbers(base, k, k, numbers, evaluations=len(cells))


def tuple_grid(base, k, jobs=1):
    """Classify every generating tuple of base B at width k."""
    if base < 4:
        raise BaseError(f"A tuple grid needs a base of at least 4, got {base}.")
    if k < 1:
        raise WidthError(f"Width k must be at least 1, got {k}.")

    cells = _classify_all(base, k, jobs)
    return TupleGrid(base, k, cells, evaluations=len(cells))
