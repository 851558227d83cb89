"""Decompositions of a simple game into intersections of weighted games.

All three constructions exploit the same observation: if the maximal
losing coalitions are split into groups, the game equals the intersection
of the games defined by the individual groups.  A coalition loses exactly
when it is contained in some maximal losing coalition, i.e. when it loses
in at least one group.  The art is choosing groups whose games are
weighted:

* ``taylor_zwicker``: one group per maximal losing coalition.  Each
  single-coalition game is trivially weighted.
* ``decompose_covering``: group the maximal losing coalitions around the
  centers of a radius-1 covering code.  Because the family is an
  antichain, every group consists of the center alone, of coalitions one
  player short of the center, or of coalitions one player beyond it, and
  each of these three shapes is weighted.
* ``decompose_pairing``: greedily match coalitions at Hamming distance at
  most 3; each matched pair forms a weighted two-coalition game, leftovers
  fall back to single-coalition games.  This never needs more parts than
  ``taylor_zwicker`` and needs strictly fewer as soon as one pair matches.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .codes import Code, greedy_cover
from .core import (
    Coalition,
    Decomposition,
    SimpleGame,
    WeightedGame,
    hamming_distance,
)
from .errors import BadPairDistance, MixedCluster, NotACover


class ClusterCase(Enum):
    """Shape of a cluster relative to its center."""

    BELOW_CENTER = "below-center"
    EXACTLY_CENTER = "exactly-center"
    ABOVE_CENTER = "above-center"


@dataclass(frozen=True)
class Cluster:
    """A group of maximal losing coalitions within distance 1 of a center.

    For an antichain the three shapes in :class:`ClusterCase` are the only
    possibilities: a member at distance 1 is the center plus or minus one
    player, and mixing sides (or including the center alongside others)
    would put one member inside another.
    """

    center: Coalition
    members: tuple[Coalition, ...]
    case_tag: ClusterCase

    def __post_init__(self) -> None:
        object.__setattr__(self, "members", tuple(sorted(set(self.members))))
        if not self.members:
            raise ValueError("a cluster needs at least one member")
        if classify_members(self.center, self.members) != self.case_tag:
            raise MixedCluster(
                f"members {[str(m) for m in self.members]} do not form a "
                f"{self.case_tag.value} cluster around {self.center}"
            )


def classify_members(
    center: Coalition, members: tuple[Coalition, ...]
) -> ClusterCase:
    """Decide which cluster shape the members form around the center.

    Raises MixedCluster when they form none of the three shapes; that can
    only happen for inputs that are not an antichain or not within
    distance 1 of the center.
    """
    if any(hamming_distance(m, center) > 1 for m in members):
        raise MixedCluster(
            f"some member is farther than distance 1 from center {center}"
        )
    if members == (center,):
        return ClusterCase.EXACTLY_CENTER
    if all(m != center and m.issubset(center) for m in members):
        return ClusterCase.BELOW_CENTER
    if all(m != center and center.issubset(m) for m in members):
        return ClusterCase.ABOVE_CENTER
    raise MixedCluster(
        f"members around {center} mix sides; the family cannot be an antichain"
    )


@dataclass(frozen=True)
class PairingPlan:
    """A maximal matching of the maximal losing coalitions at distance <= 3.

    ``pairs`` and ``singletons`` together partition the family; no two
    singletons are within distance 3 of each other (otherwise the greedy
    matching would have paired them).
    """

    pairs: tuple[tuple[Coalition, Coalition], ...]
    singletons: tuple[Coalition, ...]


def _single_losing_game(n: int, t: Coalition) -> WeightedGame:
    # Wins exactly when not contained in t: quota 1, unit weight outside t.
    return WeightedGame(1, tuple(0 if p in t else 1 for p in range(1, n + 1)))


def taylor_zwicker(game: SimpleGame) -> Decomposition:
    """One weighted game per maximal losing coalition.

    The part for coalition t has quota 1 and weight 1 exactly on the
    players outside t, so a coalition wins the part iff it is not
    contained in t.  Parts follow the canonical coalition order.
    """
    parts = tuple(_single_losing_game(game.n, t) for t in game.maximal_losing)
    return Decomposition(game.n, parts)


def cluster_partition(game: SimpleGame, code: Code) -> list[Cluster]:
    """Assign every maximal losing coalition to a covering center.

    Each coalition goes to a nearest center (distance 0 or 1), ties broken
    by smallest center mask.  Clusters come back in the code's center
    order with empty ones dropped.

    Raises NotACover if some maximal losing coalition is farther than
    distance 1 from every center.
    """
    members: dict[int, list[Coalition]] = {c.mask: [] for c in code.centers}
    for x in game.maximal_losing:
        best: Optional[tuple[int, int]] = None
        for c in code.centers:
            d = hamming_distance(x, c)
            if d <= 1 and (best is None or (d, c.mask) < best):
                best = (d, c.mask)
        if best is None:
            raise NotACover(x)
        members[best[1]].append(x)
    return [
        Cluster(c, tuple(members[c.mask]), classify_members(c, tuple(members[c.mask])))
        for c in code.centers
        if members[c.mask]
    ]


def cluster_to_weighted(cluster: Cluster, n: int) -> WeightedGame:
    """Express the game of one cluster as a weighted game.

    Below the center, with ``removed`` the players deleted from the center
    across the members: a coalition beats every member iff it leaves the
    center or keeps all removed players, so quota |removed| with weight
    |removed| outside the center and 1 on each removed player works.
    Above the center, with ``added`` the players joined to the center:
    a coalition beats every member iff it has a player outside
    center+added or two of the added players, giving quota 2 with weights
    2 outside, 1 on added players and 0 on the center.  A center-only
    cluster is the single-coalition game.
    """
    c = cluster.center
    if cluster.case_tag is ClusterCase.EXACTLY_CENTER:
        return _single_losing_game(n, c)
    if cluster.case_tag is ClusterCase.BELOW_CENTER:
        removed = Coalition(0)
        for m in cluster.members:
            removed |= c - m
        quota = len(removed)
        weights = tuple(
            quota if p not in c else (1 if p in removed else 0)
            for p in range(1, n + 1)
        )
        return WeightedGame(quota, weights)
    added = Coalition(0)
    for m in cluster.members:
        added |= m - c
    weights = tuple(
        0 if p in c else (1 if p in added else 2) for p in range(1, n + 1)
    )
    return WeightedGame(2, weights)


def decompose_covering(
    game: SimpleGame, code: Optional[Code] = None
) -> Decomposition:
    """Decompose via a radius-1 cover of the maximal losing coalitions.

    With no code given, a greedy cover of the family itself is computed
    first.  The number of parts never exceeds the number of centers.
    """
    if code is None:
        code = greedy_cover(game.n, game.maximal_losing)
    clusters = cluster_partition(game, code)
    parts = tuple(cluster_to_weighted(cl, game.n) for cl in clusters)
    return Decomposition(game.n, parts)


def pair_partition(game: SimpleGame) -> PairingPlan:
    """Greedy maximal matching of the family at Hamming distance <= 3.

    Scans coalitions in canonical order; each unmatched coalition grabs
    the first later unmatched coalition within distance 3.  Distances 0
    and 1 cannot occur inside an antichain, so every pair is at distance
    2 or 3.
    """
    family = game.maximal_losing
    matched = [False] * len(family)
    pairs: list[tuple[Coalition, Coalition]] = []
    for i, x in enumerate(family):
        if matched[i]:
            continue
        for j in range(i + 1, len(family)):
            if not matched[j] and hamming_distance(x, family[j]) <= 3:
                pairs.append((x, family[j]))
                matched[i] = matched[j] = True
                break
    singletons = tuple(x for i, x in enumerate(family) if not matched[i])
    return PairingPlan(tuple(pairs), singletons)


def pair_to_weighted(x: Coalition, y: Coalition, n: int) -> WeightedGame:
    """Express the game losing exactly inside x or y as a weighted game.

    Requires x and y incomparable at distance 2 or 3.  At distance 3 one
    side of the symmetric difference has two players (weight 1 each) and
    the other has one (weight 2); players outside both coalitions get
    weight 3 and the quota is 3.  A coalition then reaches the quota
    exactly when it escapes both x and y.  Distance 2 is the same pattern
    one level down: quota 2, lone differing players weigh 1, outsiders 2.
    """
    only_x = x - y
    only_y = y - x
    if len(only_x) == 0 or len(only_y) == 0:
        raise BadPairDistance(f"{x} and {y} are comparable; cannot pair them")
    d = len(only_x) + len(only_y)
    if d not in (2, 3):
        raise BadPairDistance(f"{x} and {y} are at distance {d}, need 2 or 3")
    if len(only_x) < len(only_y):
        only_x, only_y = only_y, only_x
    both = x | y
    if d == 2:
        weights = tuple(
            2 if p not in both else (1 if p in only_x or p in only_y else 0)
            for p in range(1, n + 1)
        )
        return WeightedGame(2, weights)
    weights = tuple(
        3
        if p not in both
        else (1 if p in only_x else (2 if p in only_y else 0))
        for p in range(1, n + 1)
    )
    return WeightedGame(3, weights)


def decompose_pairing(game: SimpleGame) -> Decomposition:
    """Decompose via the greedy distance-3 matching.

    One part per matched pair, then one single-coalition part per leftover;
    the part count is (|family| + |singletons|) / 2.
    """
    plan = pair_partition(game)
    parts = tuple(
        [pair_to_weighted(x, y, game.n) for x, y in plan.pairs]
        + [_single_losing_game(game.n, t) for t in plan.singletons]
    )
    return Decomposition(game.n, parts)
