"""Exception hierarchy shared by every module."""


class BCDimsError(Exception):
    pass


class InvalidInput(BCDimsError, ValueError):
    """Input violates a documented precondition."""


class UnsupportedInput(InvalidInput):
    """Input is well formed but outside the supported range (e.g. wild ramification)."""


class InternalConsistencyError(BCDimsError, ArithmeticError):
    """A formula produced a value outside its mathematical range."""
