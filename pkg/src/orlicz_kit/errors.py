"""Semantic exception hierarchy shared by all orlicz_kit modules."""


class OrliczKitError(Exception):
    """Base error for this package."""


class DomainError(OrliczKitError, ValueError):
    """A numeric argument lies outside the mathematical domain (e.g. t < 0)."""


class ArgumentError(OrliczKitError, ValueError):
    """Structurally invalid input: kind mismatch, empty family, bad range."""


class PreconditionError(OrliczKitError, RuntimeError):
    """A documented operation precondition is not met by the inputs."""


class EvaluationError(OrliczKitError, ArithmeticError):
    """A function produced non-finite values where finite ones are required."""


class InconsistencyError(OrliczKitError, RuntimeError):
    """Two routes that must agree produced incompatible results."""


class ConfigError(OrliczKitError, ValueError):
    """Configuration document is malformed; carries the offending field path."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)
