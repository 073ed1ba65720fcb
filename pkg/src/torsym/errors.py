"""Exception types shared across the package."""


class TorsymError(Exception):
    """Base class for all package-specific errors."""


class NotASubgroup(TorsymError):
    """A claimed subgroup relation does not hold."""


class RankDeficient(TorsymError):
    """An operation requiring full rank received a lower-rank subgroup."""


class UnknownGroup(TorsymError):
    """Requested space group name is not one of the six supported ones."""


class FrameMismatch(TorsymError):
    """Isometries from different coordinate frames were combined."""


class ClosureOverflow(TorsymError):
    """Coset closure exceeded its hard cap, signalling a wrong translation lattice."""


class UnmatchedLattice(TorsymError):
    """An invariant sublattice fits none of the closed-form families."""


class SignatureCountMismatch(TorsymError):
    """Marked-edge detection produced unexpected orbit counts."""


class Disconnected(TorsymError):
    """A graph operation requiring connectivity received a disconnected graph."""
