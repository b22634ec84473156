"""Exception types raised by :mod:`opradii`."""


class ValidationError(ValueError):
    """Raised when an input violates a documented precondition."""


class ModelError(ValueError):
    """Raised when a model operator cannot be built for the given data.

    Typical causes are polynomial roots on or outside the unit circle, for
    which the corresponding kernel of the backward shift is not contained in
    the sequence space.
    """


class FactorizationError(ArithmeticError):
    """Raised when a Fejer-Riesz factorization cannot be completed."""
