"""Exception hierarchy.

``FormatError`` covers documents that cannot be read at all; everything
else under ``DomainError`` is a well-formed request the mathematics rejects.
The CLI maps the first to exit status 2 and the second to exit status 1.
"""


class BooleError(Exception):
    pass


class FormatError(BooleError, ValueError):
    """Malformed text, JSON document or matrix file."""


class DomainError(BooleError):
    pass


class ValidationError(DomainError, ValueError):
    """A parsed value violates a range or structural invariant."""


class SizeGuardError(DomainError):
    """An enumeration would exceed its documented size cap."""


class InfeasibleInstance(DomainError):
    """The intersection probabilities admit no realization."""

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


class NotInUnionPolytope(DomainError):
    """No realization attains the requested union probability."""


class IncompleteFamily(DomainError):
    pass


class MissingSingletons(IncompleteFamily):
    pass


class MissingSets(IncompleteFamily):
    pass
