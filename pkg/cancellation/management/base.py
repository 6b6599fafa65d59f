import csv
import io
import json
import logging
from dataclasses import dataclass, field

from django.conf import settings
from django.core.management.base import BaseCommand, CommandError
from django.utils import timezone

from ..exceptions import CancellationError, WorkLimitExceeded
from ..serializers import OutputRecordSchema


logger = logging.getLogger(__name__)

# Options that change how a command runs or prints, never what it finds.
EXECUTION_OPTIONS = ("format", "jobs")


@dataclass
class Outcome:
    """
    What a command computed.

    results is the payload of the output record, rows the flat records written
    in CSV format. A non-zero returncode is raised after the output is written.
    """

    results: dict
    evaluations: int
    rows: list = field(default_factory=list)
    returncode: int = 0
    message: str = ""


class CancellationCommand(BaseCommand):
    """
    Shared plumbing of the cancellation commands: option validation through a
    Django form, timing, and JSON / CSV / plain output.
    """

    form_class = None
    csv_fields = ()
    requires_system_checks = []

    def add_arguments(self, parser):
        parser.add_argument("--format", dest="format", help="json (default), csv or plain.")
        parser.add_argument("--jobs", dest="jobs", help="Worker processes; affects speed only.")

    def compute(self, data):
        """Run the command on validated options and return an Outcome."""
        raise NotImplementedError

    def render_plain(self, outcome):
        """Lines of the plain-text output."""
        return [
            f"{key}: {json.dumps(value, sort_keys=True)}"
            for key, value in sorted(outcome.results.items())
        ]

    def handle(self, *args, **options):
        form = self.form_class(data=options)
        if not form.is_valid():
            raise CommandError(form.errors.as_text(), returncode=2)
        data = form.cleaned_data

        started = timezone.now()
        try:
            outcome = self.compute(data)
        except WorkLimitExceeded as e:
            raise CommandError(str(e), returncode=3)
        except CancellationError as e:
            raise CommandError(str(e), returncode=2)
        elapsed = (timezone.now() - started).total_seconds()

        logger.info(
            "%s finished: %s predicate evaluations in %.3f s.",
            self.command_name, outcome.evaluations, elapsed,
        )
        self.write_output(data, outcome, elapsed)

        if outcome.returncode:
            raise CommandError(outcome.message, returncode=outcome.returncode)

    @property
    def command_name(self):
        return self.__module__.rsplit(".", 1)[-1]

    def write_output(self, data, outcome, elapsed):
        output_format = data["format"]

        if output_format == "csv":
            buffer = io.StringIO()
            writer = csv.DictWriter(
                buffer, fieldnames=self.csv_fields, extrasaction="ignore", lineterminator="\n"
            )
            writer.writeheader()
            writer.writerows(outcome.rows)
            self.stdout.write(buffer.getvalue(), ending="")

        elif output_format == "plain":
            for line in self.render_plain(outcome):
                self.stdout.write(line)

        else:
            parameters = {
                key: value
                for key, value in data.items()
                if key in self.form_class.base_fields
                and key not in EXECUTION_OPTIONS
            }
            record = OutputRecordSchema().dump(
                {
                    "schema_version": settings.CANCELLATION_SCHEMA_VERSION,
                    "command": self.command_name,
                    "parameters": parameters,
                    "results": outcome.results,
                    "work_stats": {
                        "predicate_evaluations": outcome.evaluations,
                        "wall_time_seconds": elapsed,
                    },
                }
            )
            self.stdout.write(json.dumps(record, indent=2, sort_keys=True))
