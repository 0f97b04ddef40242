import os

from hypothesis import HealthCheck, settings

settings.register_profile(
    "default",
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.register_profile("quick", max_examples=10, deadline=None)
settings.register_profile(
    "thorough",
    max_examples=1_000,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
# random-seed acceptance counts: HYPOTHESIS_PROFILE=ci uv run pytest
settings.register_profile(
    "ci",
    max_examples=10_000,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)

PROFILE = os.environ.get("HYPOTHESIS_PROFILE", "default")

_base = settings.get_profile(PROFILE)

# slow properties keep the full count only under the long profiles
QUICK = (
    _base
    if PROFILE in {"thorough", "ci"}
    else settings(_base, max_examples=min(15, _base.max_examples))
)
