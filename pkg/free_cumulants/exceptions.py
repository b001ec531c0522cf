"""
Exception hierarchy shared by every subpackage.

All errors raised on purpose by ``free_cumulants`` derive from
:class:`FreeCumulantsError`; most also derive from the builtin exception a
caller would naturally catch (``ValueError``, ``ArithmeticError``, ``KeyError``).
"""


class FreeCumulantsError(Exception):
    """Base class of the package errors."""


class SizeGuardError(FreeCumulantsError, ValueError):
    """An enumeration was asked to run beyond its hard size limit."""

    def __init__(self, name: str, value: int, limit: int):
        self.name = name
        self.value = value
        self.limit = limit
        super().__init__(f"{name}={value} exceeds the limit {limit}")


class RefinementError(FreeCumulantsError, ValueError):
    """A set partition is not comparable in the required direction."""


class SizeMismatchError(FreeCumulantsError, ValueError):
    """Two objects live on ground sets of different sizes."""


class VariableMismatchError(FreeCumulantsError, ValueError):
    """Two series do not share variables or truncation depth."""


class DivisibilityError(FreeCumulantsError, ArithmeticError):
    """A divided difference left a nonzero remainder."""


class NonUnitError(FreeCumulantsError, ArithmeticError):
    """An inverse or logarithm was requested for a non-unit series."""


class NotCoCyclicError(FreeCumulantsError, ValueError):
    """A vertex split was requested at edges of two different cycles."""


class InvalidTreeError(FreeCumulantsError, ValueError):
    """A tree is not a valid tree on the requested white vertices."""


class MissingEntryError(FreeCumulantsError, KeyError):
    """A moment or cumulant table lacks a profile the computation needs."""


class ConfigError(FreeCumulantsError, ValueError):
    """Invalid combination of command-line options."""


class UnknownIdentityError(FreeCumulantsError, KeyError):
    """The identity registry has no entry with that name."""


class RouteDisagreementError(FreeCumulantsError):
    """Two independent computations of the same quantity disagree."""

    def __init__(self, what: str, monomial, first, second):
        self.what = what
        self.monomial = monomial
        self.first = first
        self.second = second
        super().__init__(f"{what}: routes differ at {monomial}: {first} != {second}")


def check_size(name: str, value: int, limit: int) -> None:
    """
    Raise :class:`SizeGuardError` when ``value`` is above ``limit``.
    :param name: name of the guarded quantity, used in the message
    :param value: requested size
    :param limit: largest accepted size
    """
    if value > limit:
        raise SizeGuardError(name, value, limit)
