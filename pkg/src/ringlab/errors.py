"""Exception types shared across the package."""


class RinglabError(Exception):
    """Base class for all ringlab errors."""


class CapacityError(RinglabError):
    """A construction would exceed the configured ring-size cap."""

    def __init__(self, would_be_size, cap):
        self.would_be_size = would_be_size
        self.cap = cap
        super().__init__(
            f"construction would produce a ring with {would_be_size} elements, "
            f"above the size cap of {cap}"
        )


class SpecParseError(RinglabError):
    """A ring-spec string does not match the grammar."""

    def __init__(self, message, text, pos):
        self.text = text
        self.pos = pos
        super().__init__(f"{message} at position {pos} in {text!r}")


class LiteralParseError(RinglabError):
    """An element literal does not match the ring's shape."""


class RingMismatchError(RinglabError):
    """An operation received operands bound to different rings."""


class HypothesisViolation(RinglabError):
    """Inputs fail a stated precondition (not regular, not unimodular, ...)."""


class ConstructionAbort(RinglabError):
    """A step of the unimodular construction found no candidate.

    On a ring verified to satisfy the summand-sum and internal-cancellation
    hypotheses this indicates a defect, so the failing step is named loudly.
    """

    def __init__(self, step, message):
        self.step = step
        super().__init__(f"construction aborted at step {step}: {message}")


class SearchBudgetExceeded(RinglabError):
    """A homomorphism search would enumerate more candidates than allowed."""


class InvariantViolation(RinglabError):
    """A verified internal invariant failed; signals a defect upstream."""
