from ...analysis import consecutive_saturation_scan, empirical_saturation
from ...forms import SaturateForm
from ...serializers import ConsecutiveScanSchema, KCountSchema, SaturationReportSchema
from ..base import CancellationCommand, Outcome


class Command(CancellationCommand):
    help = "Count solutions for k = 1 ... kmax and compare with the saturation bound."
    form_class = SaturateForm
    csv_fields = ("k", "solutions", "primitives")

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--base", help="The base B.")
        parser.add_argument("--kmax", help="Largest width scanned.")

    def compute(self, data):
        base, kmax = data["base"], data["kmax"]
        report = empirical_saturation(base, kmax, jobs=data["jobs"])

        results = SaturationReportSchema().dump(report)
        # The consecutive pattern needs two widths to compare.
        results["consecutive"] = None
        if kmax >= 2:
            scan = consecutive_saturation_scan(base, kmax, report=report)
            results["consecutive"] = ConsecutiveScanSchema().dump(scan)

        rows = KCountSchema(many=True).dump(report.counts_by_k)
        return Outcome(results, report.evaluations, rows=rows)
