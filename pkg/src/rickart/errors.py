"""Exception hierarchy shared by every module of the package."""


class RickartError(Exception):
    """Base class for all errors raised by rickart."""


class DivisionByZero(RickartError, ZeroDivisionError):
    pass


class ParseError(RickartError, ValueError):
    pass


class ShapeMismatch(RickartError, ValueError):
    pass


class FieldMismatch(ShapeMismatch):
    pass


class SingularMatrix(RickartError, ArithmeticError):
    pass


class SingularCore(SingularMatrix):
    """The r x r core of a full-rank factorization is not invertible.

    Only possible when the involution is not proper.
    """


class SingularGram(SingularMatrix):
    """The Gram matrix of an independent family is singular (improper form)."""


class NotIdempotent(RickartError, ValueError):
    pass


class NotSelfAdjoint(RickartError, ValueError):
    pass


class NotDecidable(RickartError):
    pass


class NotEnumerable(RickartError):
    pass


class PreconditionViolated(RickartError, ValueError):
    pass


class InternalDisagreement(RickartError, AssertionError):
    """Two routes that must agree on a regular *-ring returned different answers."""


class UnknownSuite(RickartError, KeyError):
    pass
