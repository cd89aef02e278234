"""Engine and verification toolkit for p-saturations of Welter's game.

Coins sit on distinct squares 0, 1, 2, ... and slide downward; play is
parameterized by a base p >= 2 and an index k bounding how many coins one
move may touch.  The package computes Sprague-Grundy values in closed
form, cross-checks them against a brute-force game-graph oracle, verifies
the degree-theoretic consequences for prime p at desk scale, and serves a
play API for the companion web UI.
"""

from .board import Partition, Position, Tower
from .grundy import SgValue, sg_coins, sg_hooks, sg_tower, sg_welter2, winning_moves
from .padic import INFINITY, DigitSeq, ominus, oplus, ordp, repunit, seq_less

__all__ = [
    "INFINITY",
    "DigitSeq",
    "Partition",
    "Position",
    "SgValue",
    "Tower",
    "ominus",
    "oplus",
    "ordp",
    "repunit",
    "seq_less",
    "sg_coins",
    "sg_hooks",
    "sg_tower",
    "sg_welter2",
    "winning_moves",
]
