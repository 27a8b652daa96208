class HopfeqError(Exception):
    """Base class for library errors."""


class FieldMismatch(HopfeqError, TypeError):
    pass


class ShapeError(HopfeqError, ValueError):
    pass


class NotAnIsomorphism(HopfeqError, ValueError):
    pass


class BudgetExceeded(HopfeqError):
    pass


class NotUnital(HopfeqError, ValueError):
    pass


class InvalidStructure(HopfeqError, ValueError):
    """Input data fails an axiom needed by the requested operation."""

    def __init__(self, message, report=None):
        super().__init__(message)
        self.report = report


class UnknownExample(HopfeqError, KeyError):
    pass
