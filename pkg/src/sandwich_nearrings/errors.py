"""Exception hierarchy shared by all modules."""


class NearRingError(Exception):
    """Base class for every error raised by this package."""


class InvalidArgument(NearRingError, ValueError):
    pass


class InvalidOrder(InvalidArgument):
    pass


class NotAGroup(InvalidArgument):
    pass


class BadLabeling(InvalidArgument):
    pass


class InvalidRecipe(InvalidArgument):
    pass


class NotType1(InvalidArgument):
    pass


class NotEmbeddable(InvalidArgument):
    pass


class NotIsomorphic(NearRingError):
    """Raised with a ``witness`` describing why a candidate map fails."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class ResourceLimit(NearRingError):
    pass


class InternalInconsistency(NearRingError, AssertionError):
    """A construction produced an object violating a law it must satisfy."""


class TheoremMismatch(NearRingError):
    """The theorem-side and brute-force verdicts disagree."""

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict
