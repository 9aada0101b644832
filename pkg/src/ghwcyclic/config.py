"""Default caps and tolerances, overridable through environment variables."""

import os

FIELD_CAP = 2**22
WEIGHT_DIST_CAP = 2**20
SUBSPACE_CAP = 10**7
TOLERANCE = 1e-6

ENV_FIELD_CAP = "GHW_FIELD_CAP"
ENV_SUBSPACE_CAP = "GHW_SUBSPACE_CAP"
ENV_TOLERANCE = "GHW_TOLERANCE"


def _env_number(name, default, kind):
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return default
    try:
        return kind(float(raw)) if kind is int else kind(raw)
    except ValueError:
        raise ValueError(f"environment variable {name}={raw!r} is not a number") from None


def env_field_cap():
    return _env_number(ENV_FIELD_CAP, FIELD_CAP, int)


def env_subspace_cap():
    return _env_number(ENV_SUBSPACE_CAP, SUBSPACE_CAP, int)


def env_tolerance():
    return _env_number(ENV_TOLERANCE, TOLERANCE, float)
