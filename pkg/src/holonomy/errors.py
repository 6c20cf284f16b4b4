"""Exception hierarchy. Every error carries a stable ``code`` used by the CLI."""

from __future__ import annotations


class HolonomyError(Exception):
    code = "HolonomyError"


class NotConnected(HolonomyError):
    code = "NotConnected"


class UnknownVertex(HolonomyError):
    code = "UnknownVertex"


class SelfLoop(HolonomyError):
    code = "SelfLoop"


class EmptyGraph(HolonomyError):
    code = "EmptyGraph"


class NotQuasicanonical(HolonomyError):
    code = "NotQuasicanonical"

    def __init__(self, reasons):
        self.reasons = tuple(reasons)
        super().__init__("matrix is not quasicanonical: " + ", ".join(self.reasons))


class NoUniqueTerminals(HolonomyError):
    code = "NoUniqueTerminals"


class StepBudgetExceeded(HolonomyError):
    code = "StepBudgetExceeded"

    def __init__(self, message, partial=None):
        super().__init__(message)
        self.partial = partial


class ConvertFailed(HolonomyError):
    """A converting error raised while iterating, tagged with the failing step."""

    def __init__(self, step: int, cause: HolonomyError):
        super().__init__(f"step {step}: {cause}")
        self.step = step
        self.cause = cause
        self.code = cause.code


class NotALineDigraph(HolonomyError):
    code = "NotALineDigraph"

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class InconsistentSeed(HolonomyError):
    code = "InconsistentSeed"


class BrokenChain(HolonomyError):
    code = "BrokenChain"


class CircuitBudgetExceeded(HolonomyError):
    code = "CircuitBudgetExceeded"

    def __init__(self, message, partial=()):
        super().__init__(message)
        self.partial = tuple(partial)


class ParseError(HolonomyError):
    code = "ParseError"

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class ReservedToken(ParseError):
    code = "ReservedToken"
