from django.apps import AppConfig


class CancellationConfig(AppConfig):
    name = 'cancellation'
    verbose_name = 'Anomalous cancellation'
