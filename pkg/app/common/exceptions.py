from __future__ import annotations


class AntimagicError(ValueError):
    """Base class for every domain error raised by the services."""


class InvalidGraphError(AntimagicError):
    pass


class InvalidSpecError(AntimagicError):
    pass


class NotEulerianError(AntimagicError):
    pass


class BudgetExceededError(AntimagicError):
    pass


class MalformedLabelingError(AntimagicError):
    pass


class MalformedMatrixError(AntimagicError):
    pass


class LemmaPreconditionError(AntimagicError):
    pass


class InternalInvariantError(AntimagicError):
    """An identity that the theory guarantees failed; points at a bug."""


class UnsupportedGraphError(AntimagicError):
    pass


class InvalidOrderError(AntimagicError):
    pass


class InvalidLabelError(AntimagicError):
    pass


class ConstructionPreconditionError(AntimagicError):
    pass


class TripartiteConditionError(AntimagicError):
    def __init__(self, condition: str, message: str):
        super().__init__(message)
        self.condition = condition


class DecompositionError(AntimagicError):
    pass


class ParseError(AntimagicError):
    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location
