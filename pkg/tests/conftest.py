"""Shared helpers for the test suite."""

from __future__ import annotations

import random

from pwelter import board
from pwelter.board import Partition, Position


def canonical_positions(size_cap: int) -> list[Position]:
    """One position per diagram of size up to size_cap (minimal coin count)."""
    out = []
    for n in range(size_cap + 1):
        for lam in board.partitions_of(n):
            out.append(board.position_of(lam, len(lam)))
    return out


def random_position(rng: random.Random, max_m: int, coin_bound: int) -> Position:
    m = rng.randint(1, max_m)
    return Position(rng.sample(range(coin_bound), m))


def all_partitions_upto(n_max: int) -> list[Partition]:
    return [lam for n in range(n_max + 1) for lam in board.partitions_of(n)]
