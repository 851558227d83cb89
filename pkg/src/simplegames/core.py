"""Core types and predicates for simple games given by maximal losing coalitions.

Players are numbered 1..n. A coalition is an n-bit mask with player i on
bit i-1, so player 1 is the least significant bit and sorting coalitions
by mask value yields the canonical deterministic order used everywhere in
this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterable

from .errors import (
    AntichainViolation,
    CapExceeded,
    EmptyFamily,
    FullCoalitionLosing,
    NonMonotoneOracle,
    PlayerOutOfRange,
)

# Single knob for every exhaustive 2**n scan in the package.
MAX_PLAYERS = 24


@dataclass(frozen=True, order=True)
class Coalition:
    """A set of players stored as a bit mask (player i on bit i-1)."""

    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0:
            raise ValueError(f"coalition mask must be non-negative, got {self.mask}")

    @classmethod
    def from_players(cls, players: Iterable[int]) -> Coalition:
        """Build a coalition from 1-based player numbers."""
        mask = 0
        for p in players:
            if p < 1:
                raise PlayerOutOfRange(f"players are numbered from 1, got {p}")
            mask |= 1 << (p - 1)
        return cls(mask)

    @classmethod
    def of(cls, *players: int) -> Coalition:
        """Shorthand: ``Coalition.of(1, 3)`` is the coalition {1, 3}."""
        return cls.from_players(players)

    @property
    def players(self) -> tuple[int, ...]:
        """Members as ascending 1-based player numbers."""
        return tuple(
            i + 1 for i in range(self.mask.bit_length()) if self.mask >> i & 1
        )

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, player: int) -> bool:
        return player >= 1 and self.mask >> (player - 1) & 1 == 1

    def issubset(self, other: Coalition) -> bool:
        return self.mask & ~other.mask == 0

    def fits(self, n: int) -> bool:
        """True when every member is one of the players 1..n."""
        return self.mask >> n == 0

    def __or__(self, other: Coalition) -> Coalition:
        return Coalition(self.mask | other.mask)

    def __and__(self, other: Coalition) -> Coalition:
        return Coalition(self.mask & other.mask)

    def __sub__(self, other: Coalition) -> Coalition:
        return Coalition(self.mask & ~other.mask)

    def __str__(self) -> str:
        return "{" + ", ".join(str(p) for p in self.players) + "}"

    def __repr__(self) -> str:
        return f"Coalition.of({', '.join(str(p) for p in self.players)})"


def full_coalition(n: int) -> Coalition:
    """The grand coalition of all n players."""
    return Coalition((1 << n) - 1)


@dataclass(frozen=True)
class SimpleGame:
    """A simple game, represented by its family of maximal losing coalitions.

    A coalition loses exactly when it is contained in one of the maximal
    losing coalitions, and wins otherwise.  Construct instances through
    :func:`validate_game`, which checks the representation invariants.
    """

    n: int
    maximal_losing: tuple[Coalition, ...]


@dataclass(frozen=True)
class WeightedGame:
    """A threshold game ``[quota; w_1, ..., w_n]`` with non-negative integers.

    A coalition wins exactly when its members' total weight reaches the
    quota.
    """

    quota: int
    weights: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "weights", tuple(self.weights))
        if not self.weights:
            raise ValueError("a weighted game needs at least one player")
        if self.quota < 0:
            raise ValueError(f"quota must be non-negative, got {self.quota}")
        for w in self.weights:
            if w < 0:
                raise ValueError(f"weights must be non-negative, got {w}")

    @property
    def n(self) -> int:
        return len(self.weights)

    def __str__(self) -> str:
        return f"[{self.quota};{','.join(str(w) for w in self.weights)}]"


@dataclass(frozen=True)
class Decomposition:
    """An ordered list of weighted games whose intersection is a simple game."""

    n: int
    parts: tuple[WeightedGame, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(self.parts))
        if not self.parts:
            raise ValueError("a decomposition needs at least one part")
        for part in self.parts:
            if part.n != self.n:
                raise ValueError(
                    f"part {part} has {part.n} players, expected {self.n}"
                )


def validate_game(n: int, coalitions: Iterable[Coalition]) -> SimpleGame:
    """Check and canonicalize a family of maximal losing coalitions.

    Exact duplicates are dropped silently; the result lists coalitions in
    ascending mask order.

    Raises:
        PlayerOutOfRange: a coalition mentions a player outside 1..n.
        FullCoalitionLosing: the grand coalition was declared losing.
        EmptyFamily: no coalition given (the empty coalition must lose,
            so every game has at least one maximal losing coalition).
        AntichainViolation: one coalition contains another.
    """
    if n < 1 or n > MAX_PLAYERS:
        raise ValueError(f"player count must be in 1..{MAX_PLAYERS}, got {n}")
    full = (1 << n) - 1
    masks = sorted({c.mask for c in coalitions})
    for m in masks:
        if m & ~full:
            raise PlayerOutOfRange(
                f"coalition {Coalition(m)} does not fit into {n} players"
            )
    if full in masks:
        raise FullCoalitionLosing(
            f"the grand coalition of all {n} players must win"
        )
    if not masks:
        raise EmptyFamily("a game needs at least one losing coalition")
    # A submask is numerically <= its supermask, so after sorting only
    # earlier-contains-later needs checking.
    for i, small in enumerate(masks):
        for large in masks[i + 1 :]:
            if small & ~large == 0:
                raise AntichainViolation(Coalition(small), Coalition(large))
    return SimpleGame(n, tuple(Coalition(m) for m in masks))


def is_winning(game: SimpleGame, s: Coalition) -> bool:
    """True unless ``s`` is contained in some maximal losing coalition."""
    if not s.fits(game.n):
        raise PlayerOutOfRange(f"{s} does not fit into {game.n} players")
    return all(s.mask & ~t.mask for t in game.maximal_losing)


def weighted_is_winning(wg: WeightedGame, s: Coalition) -> bool:
    """True when the total weight of the members of ``s`` reaches the quota."""
    if not s.fits(wg.n):
        raise PlayerOutOfRange(f"{s} does not fit into {wg.n} players")
    total = sum(w for i, w in enumerate(wg.weights) if s.mask >> i & 1)
    return total >= wg.quota


def hamming_distance(x: Coalition, y: Coalition) -> int:
    """Size of the symmetric difference of the two coalitions."""
    return (x.mask ^ y.mask).bit_count()


def derive_maximal_losing(
    n: int, winning_oracle: Callable[[Coalition], bool]
) -> tuple[Coalition, ...]:
    """Enumerate the maximal losing coalitions of a monotone win/lose oracle.

    The oracle is evaluated on all 2**n coalitions and checked for
    monotonicity along the way.  Returns the losing coalitions whose every
    one-player extension wins, in ascending mask order; the result is empty
    exactly when the oracle accepts everything (such an oracle describes no
    valid game, and :func:`validate_game` rejects the empty family).

    Raises:
        CapExceeded: n exceeds MAX_PLAYERS.
        NonMonotoneOracle: some winning coalition has a losing superset.
    """
    if n < 1:
        raise ValueError(f"player count must be positive, got {n}")
    if n > MAX_PLAYERS:
        raise CapExceeded(f"exhaustive scan needs n <= {MAX_PLAYERS}, got {n}")
    size = 1 << n
    wins = [winning_oracle(Coalition(m)) for m in range(size)]
    maximal: list[Coalition] = []
    for m in range(size):
        extensions = [m | (1 << i) for i in range(n) if not m >> i & 1]
        if wins[m]:
            for e in extensions:
                if not wins[e]:
                    raise NonMonotoneOracle(Coalition(m), Coalition(e))
        elif all(wins[e] for e in extensions):
            maximal.append(Coalition(m))
    return tuple(maximal)
