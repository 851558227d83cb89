"""Radius-1 binary covering codes and the size bounds they imply.

A code is a collection of coalitions ("centers").  It covers a target
coalition when some center is within Hamming distance 1 of it.  Perfect
Hamming codes cover the whole n-cube with 2**n/(n+1) centers for
n = 2**m - 1; for arbitrary target sets a greedy set cover does the job.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cache
from importlib import resources
from typing import Iterable

from .core import MAX_PLAYERS, Coalition, hamming_distance
from .errors import MOutOfRange, PlayerOutOfRange

HAMMING_MIN_M = 2
HAMMING_MAX_M = 4

BOUNDS_TABLE_MIN_N = 6
BOUNDS_TABLE_MAX_N = 15


@dataclass(frozen=True)
class Code:
    """A non-empty, duplicate-free, ordered collection of center coalitions."""

    n: int
    centers: tuple[Coalition, ...]

    def __post_init__(self) -> None:
        seen: dict[int, None] = {}
        for c in self.centers:
            if not c.fits(self.n):
                raise PlayerOutOfRange(f"center {c} does not fit into {self.n} players")
            seen.setdefault(c.mask)
        object.__setattr__(self, "centers", tuple(Coalition(m) for m in seen))
        if not self.centers:
            raise ValueError("a code needs at least one center")

    def __len__(self) -> int:
        return len(self.centers)


@dataclass(frozen=True)
class BoundsReport:
    """Everything this package knows about dimension bounds at one length n.

    ``lower_bound_formula`` is the counting lower bound
    C(n, floor(n/2)) / n; ``kn_exact`` is the minimum covering-code size
    when a closed form exists (n = 2**m - 1 or n = 2**m), else None;
    ``kn_upper_log`` is the dominating-set upper bound
    (ln(n+1) + 1) * 2**n / (n+1); ``known_bounds_row`` carries the bundled
    known (lower, upper) dimension bounds for 6 <= n <= 15.
    """

    n: int
    sperner_bound: int
    taylor_zwicker_minus_one: int
    lower_bound_formula: Fraction
    kn_exact: int | None
    kn_upper_log: Fraction
    known_bounds_row: tuple[int, int] | None


def _position_xor(mask: int) -> int:
    """XOR of the 1-based positions of the set bits."""
    out = 0
    pos = 1
    while mask:
        if mask & 1:
            out ^= pos
        mask >>= 1
        pos += 1
    return out


def hamming_code(m: int) -> Code:
    """The perfect radius-1 code of length n = 2**m - 1.

    A coalition is a codeword exactly when the XOR of its member numbers
    is zero; flipping bit j changes that syndrome by j, so the 2**(n-m)
    codewords' radius-1 balls tile the whole cube.
    """
    if not HAMMING_MIN_M <= m <= HAMMING_MAX_M:
        raise MOutOfRange(
            f"supported range is {HAMMING_MIN_M} <= m <= {HAMMING_MAX_M}, got {m}"
        )
    n = (1 << m) - 1
    centers = tuple(
        Coalition(mask) for mask in range(1 << n) if _position_xor(mask) == 0
    )
    return Code(n, centers)


def _ball(mask: int, n: int) -> list[int]:
    """The mask itself plus all single-bit flips."""
    return [mask] + [mask ^ (1 << i) for i in range(n)]


def greedy_cover(n: int, targets: Iterable[Coalition]) -> Code:
    """Cover every target within distance 1 using greedy set cover.

    Candidate centers are exactly the coalitions within distance 1 of some
    target; any ball that covers a target has its center there, so nothing
    is lost by skipping the rest of the cube.  Each round picks the
    candidate covering the most uncovered targets, ties broken by smallest
    mask.  Centers are returned in selection order.
    """
    if n < 1 or n > MAX_PLAYERS:
        raise ValueError(f"length must be in 1..{MAX_PLAYERS}, got {n}")
    target_masks = sorted({t.mask for t in targets})
    if not target_masks:
        raise ValueError("need at least one target to cover")
    for t in target_masks:
        if t >> n:
            raise PlayerOutOfRange(f"target {Coalition(t)} does not fit into {n} players")
    candidates = sorted({c for t in target_masks for c in _ball(t, n)})
    uncovered = set(target_masks)
    chosen: list[int] = []
    while uncovered:
        best = None
        best_count = 0
        for c in candidates:
            count = sum(1 for t in _ball(c, n) if t in uncovered)
            if count > best_count:
                best, best_count = c, count
        assert best is not None  # every target covers itself
        chosen.append(best)
        uncovered.difference_update(_ball(best, n))
    return Code(n, tuple(Coalition(c) for c in chosen))


# Perfect base codes for the padded full-cube cover, by length.  Length 1
# is the degenerate case: the single center {} covers both coalitions.
_BASE_LENGTHS = (15, 7, 3, 1)


def full_cover(n: int) -> Code:
    """A radius-1 cover of the whole n-cube.

    Uses the longest perfect code of length n' <= n, padded with every
    possible suffix on the remaining n - n' players.  The result has
    2**(n - n') * 2**(n' - m) centers and is the exact minimum when
    n is itself 2**m - 1.
    """
    if n < 1 or n > MAX_PLAYERS:
        raise ValueError(f"length must be in 1..{MAX_PLAYERS}, got {n}")
    base_n = next(b for b in _BASE_LENGTHS if b <= n)
    if base_n == 1:
        base = [0]
    else:
        base = [c.mask for c in hamming_code(base_n.bit_length()).centers]
    centers = sorted(
        b | (suffix << base_n) for suffix in range(1 << (n - base_n)) for b in base
    )
    return Code(n, tuple(Coalition(m) for m in centers))


def covering_radius_at_most(code: Code, targets: Iterable[Coalition], r: int) -> bool:
    """True when every target is within distance r of some center."""
    return all(
        any(hamming_distance(t, c) <= r for c in code.centers) for t in targets
    )


@cache
def _bounds_table() -> dict[int, tuple[int, int]]:
    text = resources.files("simplegames").joinpath("data/dimension_bounds.txt").read_text()
    table: dict[int, tuple[int, int]] = {}
    for line in text.splitlines():
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        n, lower, upper = (int(tok) for tok in line.split())
        table[n] = (lower, upper)
    return table


def bounds_report(n: int) -> BoundsReport:
    """Collect every bound this package knows for length n (1 <= n <= 63)."""
    if not 1 <= n <= 63:
        raise ValueError(f"bounds are reported for 1 <= n <= 63, got {n}")
    sperner = math.comb(n, n // 2)
    if (n + 1).bit_count() == 1:
        kn_exact = (1 << n) // (n + 1)
    elif n.bit_count() == 1:
        kn_exact = (1 << n) // n
    else:
        kn_exact = None
    kn_upper_log = (Fraction(math.log(n + 1)) + 1) * Fraction(1 << n, n + 1)
    return BoundsReport(
        n=n,
        sperner_bound=sperner,
        taylor_zwicker_minus_one=sperner - 1,
        lower_bound_formula=Fraction(sperner, n),
        kn_exact=kn_exact,
        kn_upper_log=kn_upper_log,
        known_bounds_row=_bounds_table().get(n),
    )
