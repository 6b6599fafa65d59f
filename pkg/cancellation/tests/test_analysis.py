from fractions import Fraction

from django.test import SimpleTestCase

from ..analysis import (
    OnsetReason,
    audit_number,
    audit_structure,
    consecutive_saturation_scan,
    empirical_saturation,
    generation_onset,
    prime_power_audit,
    primality_probe,
    saturation_bound,
)
from ..digits import assemble, disassemble
from ..enumeration import structured_solutions
from ..exceptions import BaseError, WidthError


class TestSaturationBound(SimpleTestCase):

    def test_base_ten(self):
        bound = saturation_bound(10)

        self.assertAlmostEqual(bound.value, 8.3398, places=3)
        self.assertEqual(bound.ceiling, 9)

    def test_base_four(self):
        bound = saturation_bound(4)

        self.assertAlmostEqual(bound.value, 5.1699, places=3)
        self.assertEqual(bound.ceiling, 6)

    def test_base_two(self):
        bound = saturation_bound(2)

        self.assertEqual(bound.value, 5)
        self.assertEqual(bound.ceiling, 5)

    def test_exact_power_of_two(self):
        # 2 log2(16) + 2 == 10 exactly.
        self.assertEqual(saturation_bound(17).ceiling, 10)
        self.assertEqual(saturation_bound(18).ceiling, 11)

    def test_huge_base(self):
        self.assertEqual(saturation_bound(2**60 + 1).ceiling, 122)

    def test_base_below_two_rejected(self):
        with self.assertRaises(BaseError):
            saturation_bound(1)


class TestEmpiricalSaturation(SimpleTestCase):

    @classmethod
    def setUpClass(cls):
        super().setUpClass()
        cls.report = empirical_saturation(10, 10)

    def test_primitives_by_width(self):
        values = {
            k: sorted(n.value for n in numbers)
            for k, numbers in self.report.primitives_by_k.items()
            if numbers
        }

        self.assertEqual(
            values,
            {
                1: [164, 195, 265, 498],
                2: [21775, 24996],
                3: [1249992],
                4: [340277776],
            },
        )

    def test_counts(self):
        self.assertEqual(
            [row.solutions for row in self.report.counts_by_k],
            [4, 6, 7, 8, 8, 8, 8, 8, 8, 8],
        )
        self.assertEqual(
            [row.primitives for row in self.report.counts_by_k],
            [4, 2, 1, 1, 0, 0, 0, 0, 0, 0],
        )

    def test_last_new_primitive(self):
        self.assertEqual(self.report.last_new_primitive_k, 4)
        self.assertEqual(self.report.bound.ceiling, 9)
        self.assertTrue(self.report.within_bound)

    def test_count_ratio(self):
        self.assertEqual(self.report.max_count, 8)
        self.assertEqual(self.report.bound_ratio, Fraction(2, 7))

    def test_evaluations(self):
        self.assertEqual(self.report.evaluations, 10 * 28)

    def test_prime_base(self):
        report = empirical_saturation(7, 6)

        self.assertEqual({row.solutions for row in report.counts_by_k}, {0})
        self.assertIsNone(report.last_new_primitive_k)
        self.assertTrue(report.within_bound)

    def test_prime_power_base(self):
        self.assertEqual(empirical_saturation(9, 6).last_new_primitive_k, 1)

    def test_small_base_has_no_ratio(self):
        self.assertIsNone(empirical_saturation(3, 2).bound_ratio)

    def test_invalid_horizon_rejected(self):
        with self.assertRaises(WidthError):
            empirical_saturation(10, 0)


class TestAuditStructure(SimpleTestCase):

    def test_164(self):
        audit = audit_number(assemble(1, 6, 4, 10, 1, 1))

        self.assertEqual((audit.a1, audit.ck, audit.gcd_ck, audit.gcd_ak_b), (1, 4, 2, 5))
        self.assertTrue(audit.ok)

    def test_21775(self):
        audit = audit_number(disassemble(21775, 10, 2, 2))

        self.assertEqual((audit.b, audit.ck), (7, 5))
        self.assertEqual((audit.gcd_ck, audit.gcd_ak_b), (5, 2))
        self.assertTrue(audit.ok)

    def test_340277776(self):
        audit = audit_number(disassemble(340277776, 10, 4, 4))

        self.assertEqual(audit.a1, 3)
        self.assertEqual(audit.number.digits_c, (7, 7, 7, 6))
        self.assertTrue(audit.last_block_ok)

    def test_equal_inner_digit_has_no_gcd(self):
        audit = audit_number(disassemble(16664, 10, 2, 2))

        self.assertIsNone(audit.gcd_ak_b)
        self.assertTrue(audit.ak_gcd_ok)

    def test_violation_is_logged(self):
        with self.assertLogs("cancellation.analysis", level="ERROR"):
            audit = audit_number(assemble(1, 2, 3, 10, 1, 1))

        self.assertFalse(audit.ok)
        self.assertFalse(audit.last_block_ok)

    def test_whole_set(self):
        audits = audit_structure(structured_solutions(60, 4))

        self.assertTrue(audits)
        self.assertTrue(all(audit.ok for audit in audits))

    def test_uneven_widths_rejected(self):
        with self.assertRaises(WidthError):
            audit_number(assemble(1, 6, 40, 10, 1, 2))


class TestPrimePowerAudit(SimpleTestCase):

    def test_base_nine(self):
        self.assertTrue(prime_power_audit(3, 2, 4))

    def test_base_four(self):
        self.assertTrue(prime_power_audit(2, 2, 3))

    def test_exponent_one_rejected(self):
        with self.assertRaises(BaseError):
            prime_power_audit(2, 1, 2)

    def test_composite_p_rejected(self):
        with self.assertRaises(BaseError):
            prime_power_audit(6, 2, 2)


class TestPrimalityProbe(SimpleTestCase):

    def test_base_ten(self):
        verdict = primality_probe(10)

        self.assertFalse(verdict.is_prime)
        self.assertEqual(verdict.witness.value, 195)

    def test_base_thirteen(self):
        verdict = primality_probe(13)

        self.assertTrue(verdict.is_prime)
        self.assertIsNone(verdict.witness)

    def test_base_four(self):
        self.assertEqual(primality_probe(4).witness.digits.digits, (1, 3, 2))

    def test_base_nine(self):
        self.assertEqual(primality_probe(9).witness.digits.digits, (2, 8, 6))

    def test_smallest_bases(self):
        self.assertTrue(primality_probe(2).is_prime)
        self.assertTrue(primality_probe(3).is_prime)

    def test_agrees_with_trial_division(self):
        for base in range(2, 120):
            is_prime = all(base % d for d in range(2, int(base**0.5) + 1))
            self.assertEqual(primality_probe(base).is_prime, is_prime, msg=base)


class TestConsecutiveSaturationScan(SimpleTestCase):

    def test_base_ten(self):
        scan = consecutive_saturation_scan(10, 10)

        self.assertEqual([k for k, new in scan.rows if new], [1, 2, 3, 4])
        self.assertTrue(scan.pattern_holds)

    def test_base_nine(self):
        scan = consecutive_saturation_scan(9, 8)

        self.assertEqual([k for k, new in scan.rows if new], [1])
        self.assertTrue(scan.pattern_holds)

    def test_prime_base(self):
        scan = consecutive_saturation_scan(5, 5)

        self.assertFalse(any(new for _, new in scan.rows))
        self.assertTrue(scan.pattern_holds)

    def test_counterexample(self):
        # Base 14 brings new primitives at k = 1 ... 4, none at 5 and 6, then new ones at 7.
        scan = consecutive_saturation_scan(14, 9)

        self.assertEqual(scan.counterexamples, (6,))
        self.assertFalse(scan.pattern_holds)

    def test_reuses_report(self):
        report = empirical_saturation(10, 6)

        self.assertEqual(
            consecutive_saturation_scan(10, 6, report=report),
            consecutive_saturation_scan(10, 6),
        )

    def test_short_horizon_rejected(self):
        with self.assertRaises(WidthError):
            consecutive_saturation_scan(10, 1)


class TestGenerationOnset(SimpleTestCase):

    def test_from_first_width(self):
        onset = generation_onset(6, 4, 10, 5)

        self.assertEqual(onset.k, 1)
        self.assertIsNone(onset.reason)

    def test_non_integral(self):
        onset = generation_onset(9, 2, 10, 6)

        self.assertEqual(onset.k, 3)
        self.assertEqual(onset.reason, OnsetReason.NON_INTEGRAL)

    def test_340277776(self):
        onset = generation_onset(7, 6, 10, 6)

        self.assertEqual(onset.k, 4)
        self.assertEqual(onset.reason, OnsetReason.NON_INTEGRAL)

    def test_never(self):
        self.assertIsNone(generation_onset(3, 2, 10, 8))
        self.assertIsNone(generation_onset(9, 2, 10, 2))
