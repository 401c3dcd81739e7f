"""Exception hierarchy shared by every module."""


class NilstalkError(Exception):
    """Base class for all library errors."""


class DomainError(NilstalkError, ValueError):
    """An argument lies outside the domain of the operation."""


class PreconditionError(DomainError):
    """Input data violates a structural precondition (e.g. odd base cohomology)."""


class ContainmentError(NilstalkError):
    """A graded group could not be removed from another one.

    Raised when a splitting hypothesis fails: the summand does not embed
    componentwise in the total.
    """


class InconsistencyError(NilstalkError):
    """A linear solve produced a non-integral or negative answer."""
