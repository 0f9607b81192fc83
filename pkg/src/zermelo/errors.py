"""Exception hierarchy shared by every module of the package."""


class ZermeloError(Exception):
    """Base class for all errors raised by this package."""


class GroundMismatch(ZermeloError):
    """Two values were built over different ground sets."""


class CapacityError(ZermeloError):
    """A ground set exceeds the 64-atom bitmask capacity."""


class UnknownAtom(ZermeloError):
    pass


class EmptyFamily(ZermeloError):
    pass


class EmptySubset(ZermeloError):
    """A choice function was asked to pick from the empty set."""


class FullSet(ZermeloError):
    """The fresh-element operator was evaluated at the whole ground set."""


class MissingTableEntry(ZermeloError):
    pass


class MembershipViolation(ZermeloError):
    """A table choice names an atom outside the subset it was chosen from."""


class GroundTooLarge(ZermeloError):
    """An exhaustive procedure was requested above its size cap."""


class NotAChain(ZermeloError):
    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class NotRegular(ZermeloError):
    def __init__(self, side, report):
        super().__init__(f"{side} family is not regular: {report.summary()}")
        self.side = side
        self.report = report


class TheoremViolation(ZermeloError):
    """Two regular families broke the initial-segment dichotomy.

    Never expected; it carries the least members ``r1`` and ``r2`` of the two
    differences so the failure can be replayed by hand.
    """

    def __init__(self, left, right, core, r1, r2):
        super().__init__(
            f"dichotomy failed: core={core} left={left} right={right} r1={r1} r2={r2}"
        )
        self.left = left
        self.right = right
        self.core = core
        self.r1 = r1
        self.r2 = r2


class AtomNotCovered(ZermeloError):
    pass


class WitnessMismatch(ZermeloError):
    """An internal invariant of the construction failed to hold."""


class SpecError(ZermeloError):
    """Problem description could not be parsed or validated."""
