"""Let pytest run the Django test suite: load core.settings before collection."""
import os

import django

os.environ.setdefault("DJANGO_SETTINGS_MODULE", "core.settings")
django.setup()
