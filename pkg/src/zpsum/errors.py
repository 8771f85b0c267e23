"""Exception hierarchy shared by every module."""


class ZpSumError(Exception):
    """Base class for all errors raised by zpsum."""


class NotPrimeError(ZpSumError, ValueError):
    pass


class ModulusMismatch(ZpSumError, ValueError):
    pass


class ParseError(ZpSumError, ValueError):
    """A set literal could not be parsed; ``token`` is the offending piece."""

    def __init__(self, message, token=None):
        super().__init__(message)
        self.token = token


class EmptyResultError(ZpSumError, ValueError):
    """Raised when an h-fold restricted sum has no summands (h > |A|).

    Distinct from an empty result set, which is a legitimate value.
    """


class PreconditionError(ZpSumError, ValueError):
    pass


class HypothesisError(ZpSumError):
    """A theorem hypothesis failed; ``hypothesis`` names which one."""

    def __init__(self, message, hypothesis=None):
        super().__init__(message)
        self.hypothesis = hypothesis


class ReductionError(ZpSumError):
    pass


class TerminalInput(ReductionError):
    pass


class CaseMismatch(ReductionError):
    pass


class DegenerateReduction(ReductionError):
    pass


class NonTermination(ReductionError):
    pass
