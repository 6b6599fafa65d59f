from ...analysis import primality_probe
from ...forms import ProbeForm
from ...serializers import ProbeVerdictSchema
from ..base import CancellationCommand, Outcome


class Command(CancellationCommand):
    help = (
        "Decide whether a base is prime by looking for a solution with b = B - 1. "
        "Exits with 0 for a composite base and 1 for a prime one."
    )
    form_class = ProbeForm

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("base", nargs="?", help="The base to probe.")

    def compute(self, data):
        verdict = primality_probe(data["base"])
        outcome = Outcome(ProbeVerdictSchema().dump(verdict), verdict.evaluations)
        if verdict.is_prime:
            outcome.returncode = 1
            outcome.message = f"Base {verdict.base} is prime."
        return outcome

    def render_plain(self, outcome):
        results = outcome.results
        line = f"{results['base']}: {results['verdict']}"
        if results["witness"]:
            line += f" (witness {results['witness']['value']}, digits {results['witness']['digits']})"
        return [line]
