"""Exception types shared across the package."""


class DegrootError(Exception):
    """Base class for every error raised by this package."""


class TopologyError(DegrootError, ValueError):
    """A family of point sets fails the topology axioms."""


class MissingEmptyOrFull(TopologyError):
    pass


class NotClosedUnderUnion(TopologyError):
    def __init__(self, a, b):
        self.pair = (a, b)
        super().__init__(f"union of {a} and {b} is not open")


class NotClosedUnderIntersection(TopologyError):
    def __init__(self, a, b):
        self.pair = (a, b)
        super().__init__(f"intersection of {a} and {b} is not open")


class CarrierMismatch(DegrootError, ValueError):
    pass


class GuardExceeded(DegrootError):
    """An exhaustive oracle was asked to search a space above its size guard."""


class CapExceeded(DegrootError):
    """Carrier size above the configured cap."""


class TheoremViolation(DegrootError, AssertionError):
    """A proved identity failed on a concrete input. Always an implementation bug."""


class PreconditionError(DegrootError, ValueError):
    pass


class PreconditionFIPViolated(PreconditionError):
    pass


class WitnessNotFound(TheoremViolation):
    pass


class UnknownFamily(DegrootError, ValueError):
    pass


class NotTruncatable(DegrootError, ValueError):
    pass


class RuleInconsistency(TheoremViolation):
    pass


class ParseError(DegrootError, ValueError):
    pass


class VerificationFailure(DegrootError):
    """A law check failed during a census; carries the offending topology as JSON."""

    def __init__(self, law, counterexample):
        self.law = law
        self.counterexample = counterexample
        super().__init__(f"{law} failed on {counterexample}")
