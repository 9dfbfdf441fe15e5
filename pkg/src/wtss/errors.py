"""Exception hierarchy shared by every module of the package."""


class WtssError(Exception):
    """Base class for all errors raised by :mod:`wtss`."""


class ParseError(WtssError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class RangeError(WtssError, ValueError):
    """A vertex or edge id lies outside the graph."""


class NegativeCycleError(WtssError):
    """A negative-weight cycle is reachable from the source."""


class UnreachableError(WtssError):
    """The requested target cannot be reached from the source."""


class NotACutError(WtssError):
    """An edge set claimed to be a cut leaves the sink reachable."""


class IntegralityError(WtssError, ValueError):
    """The construction requires integer weights."""


class BudgetError(WtssError, ValueError):
    pass


class WitnessBudgetError(BudgetError):
    """A witness increment exceeds the allowed total budget."""


class ParameterError(WtssError, ValueError):
    pass
