"""Exception types raised across the package."""


class CuspRadiusError(Exception):
    """Base class for all package errors."""


class NoSignChange(CuspRadiusError, ValueError):
    pass


class NoRoot(CuspRadiusError, ValueError):
    pass


class OutOfDomain(CuspRadiusError, ValueError):
    pass


class BranchPole(CuspRadiusError, ValueError):
    pass


class OutOfRange(CuspRadiusError, ValueError):
    pass


class NonzeroConstantTerm(CuspRadiusError, ValueError):
    pass


class NotMaMinda(CuspRadiusError, TypeError):
    """The class is not defined through a single function phi."""


class NotInBackwardTable(CuspRadiusError, KeyError):
    pass


class ParamOrder(CuspRadiusError, ValueError):
    pass


class UnsupportedClass(CuspRadiusError, KeyError):
    pass


class VerificationFailed(CuspRadiusError, AssertionError):
    pass
