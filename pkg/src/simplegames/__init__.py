"""Simple games as maximal losing coalitions, decomposed into weighted games."""

from .codes import (
    BoundsReport,
    Code,
    bounds_report,
    covering_radius_at_most,
    full_cover,
    greedy_cover,
    hamming_code,
)
from .core import (
    MAX_PLAYERS,
    Coalition,
    Decomposition,
    SimpleGame,
    WeightedGame,
    derive_maximal_losing,
    full_coalition,
    hamming_distance,
    is_winning,
    validate_game,
    weighted_is_winning,
)
from .decompose import (
    Cluster,
    ClusterCase,
    PairingPlan,
    cluster_partition,
    cluster_to_weighted,
    decompose_covering,
    decompose_pairing,
    pair_partition,
    pair_to_weighted,
    taylor_zwicker,
)
from .verify import (
    TradeCertificate,
    VerificationReport,
    check_trade_certificate,
    find_trade_certificate,
    simple_game_table,
    verify_decomposition,
    weighted_game_table,
)

__all__ = [
    "MAX_PLAYERS",
    "BoundsReport",
    "Cluster",
    "ClusterCase",
    "Coalition",
    "Code",
    "Decomposition",
    "PairingPlan",
    "SimpleGame",
    "TradeCertificate",
    "VerificationReport",
    "WeightedGame",
    "bounds_report",
    "check_trade_certificate",
    "cluster_partition",
    "cluster_to_weighted",
    "covering_radius_at_most",
    "decompose_covering",
    "decompose_pairing",
    "derive_maximal_losing",
    "find_trade_certificate",
    "full_coalition",
    "full_cover",
    "greedy_cover",
    "hamming_code",
    "hamming_distance",
    "is_winning",
    "pair_partition",
    "pair_to_weighted",
    "simple_game_table",
    "taylor_zwicker",
    "validate_game",
    "verify_decomposition",
    "weighted_game_table",
    "weighted_is_winning",
]
