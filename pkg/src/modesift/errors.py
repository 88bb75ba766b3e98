"""Exception hierarchy for the modesift package.

The CLI maps these onto process exit codes: ValidationError -> 2,
FormatError -> 3, NumericError -> 4. ResidualSignal is a control-flow
condition consumed by the decomposition outer loop, not a user-facing
failure.
"""


class ModeSiftError(Exception):
    """Base class for all package-specific errors."""


class ValidationError(ModeSiftError, ValueError):
    """Invalid argument or configuration value."""


class FormatError(ModeSiftError):
    """Malformed external input (CSV rows, config documents)."""


class ResidualSignal(ModeSiftError):
    """The signal has too few extrema to build a sifting curve.

    Raised by the envelope constructions; the outer decomposition loop
    catches it and finalizes the residual.
    """


class NumericError(ModeSiftError):
    """A numeric procedure failed (degenerate fit, non-convergence)."""


class DegenerateFitError(NumericError):
    """A least-squares fit has a vanishing normal-equation denominator."""
