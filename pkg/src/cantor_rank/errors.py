"""Error hierarchy for the cantor-rank engine and its command line."""

import re
from typing import Optional

# CLI exit codes
EXIT_OK = 0
EXIT_USAGE = 1
EXIT_PRECONDITION = 2
EXIT_CHECK_FAILED = 3

_BITS = re.compile(r"^[01]*$")


class CantorRankException(Exception):
    """Base exception for the engine"""

    exit_code = EXIT_USAGE

    def __init__(self, code: str, message: str, resource: Optional[str] = None):
        self.code = code
        self.message = message
        self.resource = resource
        super().__init__(message)

    def describe(self) -> str:
        text = f"{self.code}: {self.message}"
        if self.resource:
            text += f" [{self.resource}]"
        return text


class ValidationException(CantorRankException):
    """Invalid literal or argument"""

    def __init__(self, message: str, resource: Optional[str] = None):
        super().__init__("ValidationException", message, resource)


class ParseException(ValidationException):
    """Syntax error in a DSL, ordinal or word literal"""

    def __init__(self, message: str, position: int, text: Optional[str] = None):
        self.position = position
        super().__init__(f"{message} at position {position}", text)
        self.code = "ParseException"


class AutomatonFormatException(ValidationException):
    """Malformed automaton text"""

    def __init__(self, message: str, line: int, resource: Optional[str] = None):
        self.line = line
        super().__init__(f"line {line}: {message}", resource)
        self.code = "AutomatonFormatException"


class PreconditionException(CantorRankException):
    """Operation called outside its domain"""

    exit_code = EXIT_PRECONDITION

    def __init__(self, message: str, resource: Optional[str] = None, code: str = "PreconditionException"):
        super().__init__(code, message, resource)


class NonCompilableException(PreconditionException):
    """Expression has a subterm with no finite automaton"""

    def __init__(self, subterm: str):
        super().__init__(
            f"expression is not compilable: subterm '{subterm}' denotes a transfinite rank",
            subterm,
            "NonCompilableException",
        )


class NotSuperatomicException(PreconditionException):
    """Trace algebra has a perfect kernel"""

    def __init__(self, resource: Optional[str] = None):
        super().__init__(
            "Boolean algebra is not superatomic (perfect kernel is nonempty)",
            resource,
            "NotSuperatomicException",
        )


class EmptyCarrierException(PreconditionException):
    """Operation needs a nonempty family"""

    def __init__(self, operation: str):
        super().__init__(f"{operation} requires a nonempty family", None, "EmptyCarrierException")


class InvariantViolation(CantorRankException):
    """Internal postcondition check failed"""

    exit_code = EXIT_CHECK_FAILED

    def __init__(self, message: str, resource: Optional[str] = None):
        super().__init__("InvariantViolation", message, resource)


class CheckSuiteFailure(CantorRankException):
    """At least one acceptance check failed"""

    exit_code = EXIT_CHECK_FAILED

    def __init__(self, failed: list):
        names = ", ".join(failed)
        super().__init__("CheckSuiteFailure", f"{len(failed)} check(s) failed: {names}")


# Validation helpers
def validate_bits(bits: str, what: str = "bit word") -> None:
    """Validate a finite word over {0,1}"""
    if not isinstance(bits, str) or not _BITS.match(bits):
        raise ValidationException(f"{what} must contain only '0' and '1', got {bits!r}")


def validate_period(period: str) -> None:
    """Validate the period of an ultimately periodic word"""
    validate_bits(period, "period")
    if not period:
        raise ValidationException("period of an ultimately periodic word cannot be empty")


def validate_depth(depth: int) -> None:
    """Validate a clopen depth against the configured ceiling"""
    from .util import config
    if depth < 0 or depth > config.MAX_CLOPEN_DEPTH:
        raise ValidationException(
            f"clopen depth must be between 0 and {config.MAX_CLOPEN_DEPTH}, got {depth}"
        )


def validate_positive(value: int, what: str) -> None:
    """Validate a positive integer argument"""
    if not isinstance(value, int) or isinstance(value, bool) or value < 1:
        raise ValidationException(f"{what} must be a positive integer, got {value!r}")
