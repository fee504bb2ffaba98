"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument fell outside an operation's documented domain."""
