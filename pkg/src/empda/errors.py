"""Exception hierarchy shared by the whole package.

Every error carries an ``exit_code`` so the CLI can map failures onto its
exit-status contract: 2 for usage/config problems, 3 for bad input data,
4 for numerical failures.
"""


class EmpdaError(Exception):
    """Base class for all package errors."""

    exit_code = 4


class ConfigError(EmpdaError):
    """Invalid configuration value or scenario/flag combination."""

    exit_code = 2


class ParseError(EmpdaError):
    """A file could not be parsed; message names the offending location."""

    exit_code = 3


class MissingLabel(EmpdaError):
    """Label column absent, or one of the two classes has no rows."""

    exit_code = 3


class SchemaMismatch(EmpdaError):
    """Feature names of an input do not match the fitted model."""

    exit_code = 3


class EmptyClass(EmpdaError):
    """A class has fewer than two training rows."""

    exit_code = 3


class TooFewSamples(EmpdaError):
    """Not enough rows for the requested estimate or split."""

    exit_code = 3


class NonFiniteValue(EmpdaError):
    """NaN or infinity where a finite number is required."""

    exit_code = 3


class DimensionMismatch(EmpdaError):
    """Vector/matrix dimensions disagree with the fitted model."""

    exit_code = 3


class DomainError(EmpdaError):
    """Argument outside the mathematical domain of a function."""

    exit_code = 4


class SingularCovariance(EmpdaError):
    """Covariance factorization failed even after ridge escalation."""

    exit_code = 4


class NotPositiveDefinite(EmpdaError):
    """A matrix required to be SPD is not."""

    exit_code = 4


class DegenerateFeature(EmpdaError):
    """All training values of a feature are identical and no spacing floor applies."""

    exit_code = 4
