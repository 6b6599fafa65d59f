import re

from marshmallow import Schema, fields

from .generator import reduce


class DecimalString(fields.Field):
    """
    An arbitrary-precision integer carried as a decimal string, so values such as
    B^k never pass through a float.
    """

    default_error_messages = {"invalid": "Not a decimal integer."}

    def _serialize(self, value, attr, obj, **kwargs):
        if value is None:
            return None
        return str(int(value))

    def _deserialize(self, value, attr, data, **kwargs):
        if not isinstance(value, str) or not re.fullmatch(r"-?[0-9]+", value):
            raise self.make_error("invalid")
        return int(value)


class SolutionSchema(Schema):
    value = DecimalString()
    base = fields.Integer()
    l = fields.Integer(attribute="width_l")  # noqa: E741
    k = fields.Integer(attribute="width_k")
    a = DecimalString(attribute="block_a")
    b = fields.Integer(attribute="digit_b")
    c = DecimalString(attribute="block_c")
    digits = fields.Function(lambda number: list(number.digits.digits))
    primitive = fields.Function(lambda number: reduce(number) is None)


class GridCellSchema(Schema):
    b = fields.Integer()
    ck = fields.Integer()
    kind = fields.Function(lambda cell: cell.kind.value, data_key="class")
    l = fields.Integer(attribute="width_l", allow_none=True)  # noqa: E741
    a = DecimalString(attribute="block_a", allow_none=True)
    integral = fields.Boolean()


class DivisibilitySchema(Schema):
    a_divides_bc = fields.Boolean(data_key="aDividesBC")
    b_divides_ac_b_minus_1 = fields.Boolean(data_key="bDividesACBminus1")
    c_divides_ab_bk = fields.Boolean(data_key="cDividesABBk")
    ratio_d = DecimalString(data_key="ratioD", allow_none=True)


class StructureAuditSchema(Schema):
    value = fields.Function(lambda audit: str(audit.number.value))
    a1 = fields.Integer()
    b = fields.Integer()
    ck = fields.Integer()
    ak = fields.Integer()
    gcd_ck = fields.Integer(data_key="gcdCk")
    gcd_ak_b = fields.Integer(data_key="gcdAkMinusB", allow_none=True)
    leading_digit_ok = fields.Boolean(data_key="leadingDigitOk")
    last_block_ok = fields.Boolean(data_key="lastBlockOk")
    ck_gcd_ok = fields.Boolean(data_key="ckGcdOk")
    ak_gcd_ok = fields.Boolean(data_key="akGcdOk")
    leading_block_ok = fields.Boolean(data_key="leadingBlockOk")
    ok = fields.Boolean()


class KCountSchema(Schema):
    k = fields.Integer()
    solutions = fields.Integer()
    primitives = fields.Integer()


class SaturationReportSchema(Schema):
    base = fields.Integer()
    k_max = fields.Integer(data_key="kMax")
    bound_value = fields.Function(lambda report: report.bound.value, data_key="theoreticalBound")
    bound_ceiling = fields.Function(lambda report: report.bound.ceiling, data_key="boundCeiling")
    counts_by_k = fields.List(fields.Nested(KCountSchema), data_key="countsByK")
    primitives_by_k = fields.Method("get_primitives_by_k", data_key="primitivesByK")
    last_new_primitive_k = fields.Integer(data_key="lastNewPrimitiveK", allow_none=True)
    max_count = fields.Integer(data_key="maxCount")
    bound_ratio = fields.Function(
        lambda report: None if report.bound_ratio is None else str(report.bound_ratio),
        data_key="boundRatio",
    )
    within_bound = fields.Boolean(data_key="withinBound")

    def get_primitives_by_k(self, report):
        return {
            str(k): [str(number.value) for number in numbers]
            for k, numbers in report.primitives_by_k.items()
        }


class ConsecutiveScanSchema(Schema):
    rows = fields.Function(
        lambda scan: [{"k": k, "newPrimitives": new} for k, new in scan.rows]
    )
    counterexamples = fields.List(fields.Integer())
    pattern_holds = fields.Boolean(data_key="patternHolds")


class ProbeVerdictSchema(Schema):
    base = fields.Integer()
    verdict = fields.Function(lambda verdict: "prime" if verdict.is_prime else "composite")
    witness = fields.Nested(SolutionSchema, allow_none=True)


class WorkStatsSchema(Schema):
    predicate_evaluations = fields.Integer(data_key="predicateEvaluations")
    wall_time_seconds = fields.Float(data_key="wallTimeSeconds")


class OutputRecordSchema(Schema):
    schema_version = fields.String(data_key="schemaVersion")
    command = fields.String()
    parameters = fields.Dict(keys=fields.String())
    results = fields.Raw()
    work_stats = fields.Nested(WorkStatsSchema, data_key="workStats")
