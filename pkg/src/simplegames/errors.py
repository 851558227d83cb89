"""Exception hierarchy shared across the package."""

from __future__ import annotations


class GameError(Exception):
    """Base class for every domain error raised by this package."""


class PlayerOutOfRange(GameError):
    """A coalition refers to a player outside 1..n."""


class AntichainViolation(GameError):
    """One maximal losing coalition contains another."""

    def __init__(self, inner, outer):
        self.inner = inner
        self.outer = outer
        super().__init__(
            f"coalition {inner} is contained in {outer}; "
            "maximal losing coalitions must be pairwise incomparable"
        )


class FullCoalitionLosing(GameError):
    """The grand coalition of all players was declared losing."""


class EmptyFamily(GameError):
    """No losing coalition was given; the empty coalition must lose."""


class NonMonotoneOracle(GameError):
    """A winning-coalition oracle lost a superset of a winner."""

    def __init__(self, winner, losing_superset):
        self.winner = winner
        self.losing_superset = losing_superset
        super().__init__(
            f"{winner} wins but its superset {losing_superset} loses"
        )


class MOutOfRange(GameError):
    """Hamming code parameter outside the supported range."""


class NotACover(GameError):
    """A target coalition is farther than distance 1 from every center."""

    def __init__(self, uncovered):
        self.uncovered = uncovered
        super().__init__(f"coalition {uncovered} is not covered by any center")


class MixedCluster(GameError):
    """Cluster members sit on both sides of the center (impossible for antichains)."""


class BadPairDistance(GameError):
    """Paired coalitions must be incomparable and at Hamming distance 2 or 3."""


class DimensionMismatch(GameError):
    """Game and decomposition disagree on the number of players."""


class UnbalancedTrade(GameError):
    """Trade certificate where the two pairs do not use identical player multisets."""


class CapExceeded(GameError):
    """An exhaustive scan was requested above the configured player cap."""
