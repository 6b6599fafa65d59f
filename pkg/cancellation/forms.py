from django import forms
from django.conf import settings
from django.core.validators import RegexValidator

from .digits import disassemble
from .exceptions import CancellationError


FORMAT_CHOICES = [
    ("json", "JSON"),
    ("csv", "CSV"),
    ("plain", "Plain text"),
]


class CommandForm(forms.Form):
    """
    Options shared by every command: output format and parallel width.
    Unset options fall back to the project settings.
    """

    format = forms.ChoiceField(choices=FORMAT_CHOICES, required=False)
    jobs = forms.IntegerField(min_value=1, required=False)

    def clean_format(self):
        return self.cleaned_data["format"] or "json"

    def clean_jobs(self):
        return self.cleaned_data["jobs"] or settings.CANCELLATION_JOBS


class EnumerateForm(CommandForm):
    base = forms.IntegerField(min_value=2)
    k = forms.IntegerField(min_value=1)
    l = forms.IntegerField(min_value=1, required=False)  # noqa: E741
    engine = forms.ChoiceField(
        choices=[
            ("oracle", "Brute-force oracle"),
            ("structured", "Generating tuples"),
            ("both", "Both, compared"),
        ],
        required=False,
    )
    work_limit = forms.IntegerField(min_value=1, required=False)

    def clean_engine(self):
        return self.cleaned_data["engine"] or "structured"

    def clean_work_limit(self):
        return self.cleaned_data["work_limit"] or settings.CANCELLATION_WORK_LIMIT

    def clean(self):
        cleaned_data = super().clean()
        k = cleaned_data.get("k")
        if cleaned_data.get("l") is None:
            cleaned_data["l"] = k
        if cleaned_data.get("engine") != "oracle" and cleaned_data["l"] != k:
            raise forms.ValidationError(
                "Only the oracle engine accepts l different from k."
            )
        return cleaned_data


class VerifyForm(CommandForm):
    format = forms.ChoiceField(
        choices=[("json", "JSON"), ("plain", "Plain text")], required=False
    )
    number = forms.CharField(
        validators=[RegexValidator(r"^[0-9]+$", "Enter a non-negative decimal integer.")],
        strip=True,
    )
    base = forms.IntegerField(min_value=2)
    l = forms.IntegerField(min_value=1)  # noqa: E741
    k = forms.IntegerField(min_value=1)

    def clean(self):
        cleaned_data = super().clean()
        if self.errors:
            return cleaned_data
        try:
            cleaned_data["cancellation_number"] = disassemble(
                int(cleaned_data["number"]),
                cleaned_data["base"],
                cleaned_data["l"],
                cleaned_data["k"],
            )
        except CancellationError as e:
            raise forms.ValidationError(str(e))
        return cleaned_data


class GridForm(CommandForm):
    format = forms.ChoiceField(choices=[("json", "JSON"), ("csv", "CSV")], required=False)
    base = forms.IntegerField(min_value=4)
    k = forms.IntegerField(min_value=1)


class SaturateForm(CommandForm):
    base = forms.IntegerField(min_value=2)
    kmax = forms.IntegerField(min_value=1)


class ProbeForm(CommandForm):
    format = forms.ChoiceField(
        choices=[("json", "JSON"), ("plain", "Plain text")], required=False
    )
    base = forms.IntegerField(min_value=2)
