from ...analysis import audit_number
from ...forms import VerifyForm
from ...predicate import (
    classify_triviality,
    divisibility_report,
    has_property_P,
    has_property_P_star,
    satisfies_fraction_form,
)
from ...serializers import DivisibilitySchema, SolutionSchema, StructureAuditSchema
from ..base import CancellationCommand, Outcome


class Command(CancellationCommand):
    help = "Check whether a number has the anomalous cancellation property, and why."
    form_class = VerifyForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("number", nargs="?", help="The number, in decimal.")
        parser.add_argument("--base", help="The base B.")
        parser.add_argument("--l", help="Width of the leading block.")
        parser.add_argument("--k", help="Width of the trailing block.")

    def compute(self, data):
        n = data["cancellation_number"]

        results = {
            "number": SolutionSchema().dump(n),
            "hasPropertyP": has_property_P(n),
            "hasPropertyPStar": False,
            "triviality": None,
            "zeroBlocks": [],
            "fractionForm": satisfies_fraction_form(n),
            "divisibility": None,
            "structureAudit": None,
        }
        if results["hasPropertyP"]:
            triviality = classify_triviality(n)
            results["triviality"] = triviality.kind.value
            results["zeroBlocks"] = list(triviality.zero_blocks)
            results["hasPropertyPStar"] = has_property_P_star(n)
            results["divisibility"] = DivisibilitySchema().dump(divisibility_report(n))
            if results["hasPropertyPStar"] and n.width_l == n.width_k:
                results["structureAudit"] = StructureAuditSchema().dump(audit_number(n))

        return Outcome(results, evaluations=1)
