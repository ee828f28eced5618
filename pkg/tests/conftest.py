import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=1000,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
    derandomize=True,
)
settings.register_profile("quick", max_examples=100, deadline=None, derandomize=True)
settings.load_profile(os.environ.get("TAFFY_HYPOTHESIS_PROFILE", "default"))
