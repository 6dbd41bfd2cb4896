"""Exception types shared across the package."""


class DomainError(ValueError):
    """Raised when a point or parameter lies outside an operation's domain.

    Covers singular loci of charts (the x3 axis for azimuthal angles, the
    origin for radial coordinates), elementary-function domains (log of a
    non-positive number, sqrt of a negative one) and special-function
    envelopes.
    """
