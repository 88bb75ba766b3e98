"""Small input-validation helpers shared across modules."""

import numpy as np

from .errors import ValidationError


def as_float_array(values, name="values", min_length=None):
    """Coerce to a 1-D float64 array, rejecting NaN/inf and short inputs."""
    arr = np.asarray(values, dtype=float)
    if arr.ndim != 1:
        arr = np.ravel(arr)
    if not np.all(np.isfinite(arr)):
        raise ValidationError(f"{name} must be finite")
    if min_length is not None and arr.size < min_length:
        raise ValidationError(
            f"{name} needs at least {min_length} entries, got {arr.size}"
        )
    return arr


def require(condition, message):
    if not condition:
        raise ValidationError(message)


def positive_int(value, name):
    if not isinstance(value, (int, np.integer)) or isinstance(value, bool):
        raise ValidationError(f"{name} must be an integer, got {value!r}")
    if value < 1:
        raise ValidationError(f"{name} must be >= 1, got {value}")
    return int(value)


def choice(value, options, name):
    if value not in options:
        raise ValidationError(f"{name} must be one of {sorted(options)}, got {value!r}")
    return value
