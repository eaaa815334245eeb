class InputError(ValueError):
    """Malformed or invariant-violating input."""


class DomainError(ValueError):
    """Valid input that lies outside the domain of a map."""


class DivisibilityError(ArithmeticError):
    """Polynomial division left a nonzero remainder."""
