"""Exception hierarchy shared by every module."""


class MonocyclesError(Exception):
    """Base class for errors raised by this package."""


class InstanceTooLarge(MonocyclesError):
    """A desk-scale cap (circuit enumeration, lcm lattice, order search) was exceeded."""


class NotACycle(MonocyclesError):
    """The chain or monomial handed to a boundary test is not a Koszul cycle."""


class NotHomogeneous(MonocyclesError):
    """A chain mixes multidegrees or homological degrees."""


class DegreeOneGenerator(MonocyclesError):
    """A Golod-facing check received an ideal with a linear generator."""


class HypothesisFailure(MonocyclesError):
    """The linear-quotient monomial basis construction does not apply.

    ``reason`` is one of ``"linear-quotients"``, ``"regular"`` or
    ``"nice-lifts"``.
    """

    def __init__(self, reason, message=None):
        self.reason = reason
        super().__init__(message or f"hypothesis failed: {reason}")


class PathDisagreement(MonocyclesError):
    """Two independent computations of the same predicate disagreed."""
