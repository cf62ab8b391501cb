"""Exception hierarchy shared by the numerical modules and the CLI."""


class DomainError(ValueError):
    """An argument lies outside the domain where the quantity is defined."""


class DivergenceError(DomainError):
    """The quantity is infinite at the requested argument (e.g. K(1))."""


class ValidityRangeError(DomainError):
    """A theorem-level bound was requested outside its hypotheses."""


class BoundUndefinedError(DomainError):
    """The bound formula has no real value for the chosen free parameter."""


class UnsupportedOperationError(TypeError):
    """The operation is not available for the given domain variant."""
