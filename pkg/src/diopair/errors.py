"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input is outside the mathematical domain of the operation."""


class TheoremViolationError(RuntimeError):
    """A computation contradicted a property that is supposed to hold.

    Raised loudly instead of returning a wrong answer: seeing this means
    either the implementation or the underlying claim is broken.
    """
