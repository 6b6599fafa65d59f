from itertools import product

from django.test import SimpleTestCase, tag

from ..digits import assemble, disassemble
from ..exceptions import NotASolutionError
from ..predicate import (
    Triviality,
    classify_triviality,
    divisibility_report,
    has_property_P,
    has_property_P_star,
    ratio_d,
    satisfies_fraction_form,
)


def all_numbers(base, k):
    """Every N_k in base B, leading digit non-zero."""
    for a, b, c in product(range(base ** (k - 1), base**k), range(base), range(base**k)):
        yield assemble(a, b, c, base, k, k)


class TestHasPropertyP(SimpleTestCase):

    def test_164(self):
        self.assertTrue(has_property_P(assemble(1, 6, 4, 10, 1, 1)))

    def test_all_digits_equal(self):
        self.assertTrue(has_property_P(assemble(7, 7, 7, 10, 1, 1)))

    def test_123_is_not_a_solution(self):
        self.assertFalse(has_property_P(assemble(1, 2, 3, 10, 1, 1)))

    def test_24996(self):
        self.assertTrue(has_property_P(disassemble(24996, 10, 2, 2)))

    def test_same_value_different_widths(self):
        # 1640 cancels as 16/640 = 1/40 but not as 164/40.
        self.assertTrue(has_property_P(assemble(1, 6, 40, 10, 1, 2)))
        self.assertFalse(has_property_P(assemble(16, 4, 0, 10, 2, 1)))


class TestClassifyTriviality(SimpleTestCase):

    def test_all_digits_equal(self):
        triviality = classify_triviality(assemble(5, 5, 5, 10, 1, 1))

        self.assertEqual(triviality.kind, Triviality.ALL_DIGITS_EQUAL)
        self.assertTrue(triviality.is_trivial)

    def test_zero_blocks(self):
        triviality = classify_triviality(assemble(1, 0, 0, 10, 1, 1))

        self.assertEqual(triviality.kind, Triviality.ZERO_BLOCKS)
        self.assertEqual(triviality.zero_blocks, ("b", "c"))
        self.assertNotEqual(triviality.zero_blocks, ("a", "b"))

    def test_non_trivial(self):
        triviality = classify_triviality(assemble(1, 6, 4, 10, 1, 1))

        self.assertEqual(triviality.kind, Triviality.NON_TRIVIAL)
        self.assertFalse(triviality.is_trivial)

    def test_equal_digits_with_uneven_widths_is_not_a_solution(self):
        # [5 5 5 5] as N_{2;1}: 555 * 5 != 55 * 55.
        self.assertFalse(has_property_P(assemble(55, 5, 5, 10, 2, 1)))

    def test_non_solution_rejected(self):
        with self.assertRaises(NotASolutionError):
            classify_triviality(assemble(1, 2, 3, 10, 1, 1))


class TestHasPropertyPStar(SimpleTestCase):

    def test_24996(self):
        self.assertTrue(has_property_P_star(disassemble(24996, 10, 2, 2)))

    def test_999(self):
        self.assertFalse(has_property_P_star(assemble(9, 9, 9, 10, 1, 1)))

    def test_non_solution(self):
        self.assertFalse(has_property_P_star(assemble(1, 2, 3, 10, 1, 1)))

    def test_prime_base_seven_has_no_solutions(self):
        self.assertFalse(any(has_property_P_star(n) for n in all_numbers(7, 1)))

    def test_base_ten_three_digit_solutions(self):
        values = sorted(n.value for n in all_numbers(10, 1) if has_property_P_star(n))

        self.assertEqual(values, [164, 195, 265, 498])


class TestSatisfiesFractionForm(SimpleTestCase):

    def test_agrees_with_polynomial_form(self):
        for n in all_numbers(6, 1):
            if n.block_a and n.digit_b and n.block_c:
                self.assertEqual(satisfies_fraction_form(n), has_property_P(n))

    def test_zero_block_is_undefined(self):
        self.assertFalse(satisfies_fraction_form(assemble(1, 0, 0, 10, 1, 1)))


class TestDivisibilityReport(SimpleTestCase):

    def test_164(self):
        report = divisibility_report(assemble(1, 6, 4, 10, 1, 1))

        self.assertTrue(report.all_hold)
        self.assertEqual(report.ratio_d, 24)

    def test_zero_blocks_hold_vacuously(self):
        report = divisibility_report(assemble(1, 0, 0, 10, 1, 1))

        self.assertTrue(report.all_hold)
        self.assertIsNone(report.ratio_d)

    def test_24996(self):
        report = divisibility_report(disassemble(24996, 10, 2, 2))

        self.assertTrue(report.all_hold)
        self.assertEqual(report.ratio_d, 36)
        self.assertNotEqual(report.ratio_d, 24)

    def test_non_solution_rejected(self):
        with self.assertRaises(NotASolutionError):
            divisibility_report(assemble(1, 2, 3, 10, 1, 1))

    def test_ratio_d_of_non_solution(self):
        self.assertIsNone(ratio_d(assemble(7, 2, 3, 10, 1, 1)))


@tag("slow")
class TestEverySolution(SimpleTestCase):
    """Facts about every solution, checked exhaustively for small bases."""

    def test_no_solution_has_exactly_one_zero_block(self):
        for base in range(2, 13):
            for k in (1, 2):
                for n in all_numbers(base, k):
                    if has_property_P(n):
                        zeros = sum(block == 0 for block in n.blocks)
                        self.assertNotEqual(zeros, 1, msg=str(n))

    def test_forced_equalities_give_all_equal_digits(self):
        for base in range(2, 13):
            for k in (1, 2):
                repunit = (base**k - 1) // (base - 1)
                for n in all_numbers(base, k):
                    a, b, c = n.blocks
                    if not has_property_P(n) or a == 0 or b == 0:
                        continue
                    if a == c or a == b * repunit or c == b * repunit:
                        self.assertEqual(
                            classify_triviality(n).kind, Triviality.ALL_DIGITS_EQUAL, msg=str(n)
                        )

    def test_non_trivial_solutions_have_large_ratio_and_nonzero_last_digit(self):
        for base in range(2, 13):
            for k in (1, 2):
                for n in all_numbers(base, k):
                    if has_property_P_star(n):
                        report = divisibility_report(n)
                        self.assertTrue(report.all_hold, msg=str(n))
                        self.assertGreaterEqual(report.ratio_d, base, msg=str(n))
                        self.assertNotEqual(n.block_c % base, 0, msg=str(n))
