"""Exception hierarchy shared by every module of the package."""


class ModSimpleError(Exception):
    """Base class for all errors raised by modsimple."""


class MalformedInputError(ModSimpleError, ValueError):
    """Input data (a permutation, a group file, a corpus line) is not well formed."""


class DomainError(ModSimpleError, ValueError):
    """An argument lies outside the mathematical domain of the operation."""


class PreconditionError(ModSimpleError, ValueError):
    """A structural hypothesis required by the operation does not hold.

    ``failing`` lists the names of the hypotheses that failed.
    """

    def __init__(self, message, failing=()):
        super().__init__(message)
        self.failing = tuple(failing)


class CapabilityError(ModSimpleError, RuntimeError):
    """The computation exceeds a configured resource bound."""

    def __init__(self, message, bound=None):
        super().__init__(message)
        self.bound = bound


class IncompleteError(ModSimpleError, RuntimeError):
    """A search terminated without certifying a complete answer."""


class BuildError(ModSimpleError, ValueError):
    """A group builder spec cannot be resolved to a faithful permutation group."""
