"""Exception types shared across the package."""


class FalsificationError(RuntimeError):
    """A mathematically certified statement failed a machine check.

    Raised when a computation contradicts something the engine is built to
    verify (a position set that is not a Bruhat interval, a torus weight of
    the wrong shape, a contracted curve). This is deliberately distinct from
    ValueError: bad input is the caller's problem, a falsification is a
    finding and must never be silently repaired.
    """
