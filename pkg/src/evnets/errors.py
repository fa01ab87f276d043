"""Exception types shared across the package."""

from __future__ import annotations

__all__ = ["ParamError", "PrecisionError", "FormatError", "VerificationError"]


class ParamError(ValueError):
    """A parameter violates an operation's precondition."""


class PrecisionError(ParamError):
    """A requested digit precision exceeds what the object carries."""


class FormatError(ValueError):
    """A text file does not conform to its format.

    ``line`` holds the 1-based line number of the offending line when known.
    """

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class VerificationError(RuntimeError):
    """An operation required a passing verdict and got a failing one.

    The failing :class:`~evnets.core.Verdict` is attached as ``verdict``.
    """

    def __init__(self, message: str, verdict):
        super().__init__(f"{message}: {verdict.witness}")
        self.verdict = verdict
