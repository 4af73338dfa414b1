"""Exception types shared across the package."""


class RinglineError(Exception):
    """Base class for all errors raised by this package."""


class RingSpecError(RinglineError, ValueError):
    """A ring specification string is malformed or invalid.

    ``pos`` is the 1-based character position the error refers to, or
    None when no single position applies.
    """

    def __init__(self, message, pos=None):
        if pos is not None:
            message = f"{message} (position {pos})"
        super().__init__(message)
        self.pos = pos


class BuildError(RinglineError):
    """A ring could not be constructed."""


class BoundExceededError(BuildError):
    """The requested ring is larger than the enumeration bound."""


class RingAxiomError(RinglineError):
    """A tabulated structure violates the commutative-ring axioms."""


class ElementError(RinglineError, ValueError):
    """An element or point name does not denote an element of the ring."""


class IdealError(RinglineError):
    """A set of elements violates the ideal predicate."""


class HomomorphismError(RinglineError):
    """An element map violates the ring homomorphism laws."""


class InducedMapError(RinglineError):
    """A homomorphism does not induce a map of projective lines."""
