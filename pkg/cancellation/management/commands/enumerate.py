from ...enumeration import brute_force_solutions, structured_solutions
from ...forms import EnumerateForm
from ...serializers import SolutionSchema
from ..base import CancellationCommand, Outcome


class Command(CancellationCommand):
    help = (
        "List the non-trivial anomalous cancellation numbers of a base and width, "
        "from the generating tuples, the brute-force oracle, or both compared."
    )
    form_class = EnumerateForm
    csv_fields = ("value", "base", "l", "k", "a", "b", "c", "digits", "primitive")

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--base", help="The base B.")
        parser.add_argument("--k", help="Width of the trailing block.")
        parser.add_argument("--l", help="Width of the leading block (oracle only; default k).")
        parser.add_argument("--engine", help="oracle, structured (default) or both.")
        parser.add_argument(
            "--work-limit", dest="work_limit", help="Largest oracle scan, in predicate evaluations."
        )

    def compute(self, data):
        base, k, engine = data["base"], data["k"], data["engine"]

        structured = oracle = None
        if engine in ("structured", "both"):
            structured = structured_solutions(base, k, jobs=data["jobs"])
        if engine in ("oracle", "both"):
            oracle = brute_force_solutions(
                base, data["l"], k, work_limit=data["work_limit"], jobs=data["jobs"]
            )

        solutions = structured if structured is not None else oracle
        dumped = SolutionSchema(many=True).dump(solutions.solutions)
        results = {
            "engine": engine,
            "count": len(solutions),
            "solutions": dumped,
        }
        evaluations = sum(s.evaluations for s in (structured, oracle) if s is not None)

        outcome = Outcome(
            results,
            evaluations,
            rows=[dict(row, digits=" ".join(map(str, row["digits"]))) for row in dumped],
        )

        if engine == "both":
            structured_values, oracle_values = set(structured.values), set(oracle.values)
            diff = {
                "structuredOnly": [str(v) for v in sorted(structured_values - oracle_values)],
                "oracleOnly": [str(v) for v in sorted(oracle_values - structured_values)],
            }
            results["diff"] = diff
            if diff["structuredOnly"] or diff["oracleOnly"]:
                outcome.returncode = 4
                outcome.message = f"The engines disagree for base {base}, k={k}."

        return outcome

    def render_plain(self, outcome):
        lines = [f"{outcome.results['count']} solution(s) ({outcome.results['engine']})"]
        for row in outcome.rows:
            marker = "primitive" if row["primitive"] else "extension"
            lines.append(f"{row['value']}  [{row['digits']}]  {marker}")
        return lines
