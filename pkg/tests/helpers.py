"""Shared helpers for the test suite."""

from __future__ import annotations

import random

from simplegames import Coalition, SimpleGame, validate_game


def seven_player_example() -> SimpleGame:
    """n=7 game whose maximal losing coalitions are {1,2,3} and {3,4,5,6}."""
    return validate_game(7, [Coalition.of(1, 2, 3), Coalition.of(3, 4, 5, 6)])


def four_player_example() -> SimpleGame:
    """n=4 game that wins iff it contains both of {1,2} or both of {3,4}."""
    return validate_game(
        4,
        [Coalition.of(1, 3), Coalition.of(1, 4), Coalition.of(2, 3), Coalition.of(2, 4)],
    )


def reduce_to_maximal(masks: set[int]) -> list[int]:
    """Drop every mask strictly contained in another; the rest is an antichain."""
    return sorted(
        m for m in masks if not any(m != o and m & ~o == 0 for o in masks)
    )


def random_antichain_game(n: int, rng: random.Random) -> SimpleGame:
    """Sample a valid game by reducing random coalitions to their maximal ones.

    The grand coalition is excluded from sampling, so the reduced family is
    always a valid collection of maximal losing coalitions.
    """
    k = rng.randint(1, 2 * n)
    masks = {rng.randrange((1 << n) - 1) for _ in range(k)}
    maximal = reduce_to_maximal(masks)
    return validate_game(n, [Coalition(m) for m in maximal])
