"""Exception types shared across the package."""


class RegionChangeError(Exception):
    """Base class for all errors raised by this package."""


class MalformedError(RegionChangeError):
    """Input text or structure does not describe a valid diagram or graph."""


class LabelMultiplicityError(MalformedError):
    """An edge label does not appear exactly twice in a PD code."""


class DisconnectedError(MalformedError):
    """The underlying 4-valent graph (or plane graph) is not connected."""


class SameComponentError(RegionChangeError):
    """Linking number requested for a component paired with itself."""


class IndexMismatchError(RegionChangeError):
    """A region or crossing bit vector has the wrong length."""


class BudgetExceededError(RegionChangeError):
    """An exhaustive enumeration would exceed the configured budget."""


class CheckFailedError(RegionChangeError):
    """A cross-check between two independent computations failed.

    Carries a serialized description of the offending instance.
    """

    def __init__(self, message, instance=None):
        super().__init__(message)
        self.instance = instance


class InternalInconsistencyError(RegionChangeError):
    """An invariant that is guaranteed by construction was violated."""
