from ...enumeration import count_bound, tuple_grid
from ...forms import GridForm
from ...serializers import GridCellSchema
from ..base import CancellationCommand, Outcome


class Command(CancellationCommand):
    help = (
        "Classify every generating tuple (b, ck) of a base at width k. "
        "CSV columns: b, ck, class (full, short or none), l, a."
    )
    form_class = GridForm
    csv_fields = ("b", "ck", "class", "l", "a")

    def add_arguments(self, parser):
        super().add_arguments(parser)
        parser.add_argument("--base", help="The base B, at least 4.")
        parser.add_argument("--k", help="Width of the trailing block.")

    def compute(self, data):
        grid = tuple_grid(data["base"], data["k"], jobs=data["jobs"])
        cells = GridCellSchema(many=True).dump(grid.cells)

        results = {
            "cellCount": len(grid),
            "countBound": count_bound(grid.base),
            "counts": {kind.value: count for kind, count in grid.counts().items()},
            "integralCount": grid.integral_count,
            "cells": cells,
        }
        return Outcome(results, grid.evaluations, rows=cells)
