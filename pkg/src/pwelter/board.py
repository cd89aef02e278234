"""Positions, partitions, hooks, residue decomposition, p-cores and towers.

A position is a finite set of distinct squares 0, 1, 2, ... occupied by
coins.  Listing the coins in decreasing order as x1 > x2 > ... > xm, the
attached partition has parts xi - m + i (zero parts dropped), and sliding a
coin to a lower empty square removes a hook from its Young diagram.

Splitting every coin into its low base-p digits (the residue) and the
remaining high digits (the quotient) decomposes a position into p**L
sub-positions, one per residue key.  Iterating the length-1 decomposition
and taking core sizes at each depth yields the tower of a position, whose
rows weight p**L and sum to the diagram size.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Mapping

from .padic import check_base, digits_of


@dataclass(frozen=True)
class Position:
    """Strictly increasing tuple of distinct non-negative coin squares."""

    coins: tuple[int, ...]

    def __init__(self, coins: Iterable[int] = ()) -> None:
        coins = tuple(sorted(int(c) for c in coins))
        if coins and coins[0] < 0:
            raise ValueError(f"coins must be non-negative, got {coins}")
        if len(set(coins)) != len(coins):
            raise ValueError(f"coins must be distinct, got {coins}")
        object.__setattr__(self, "coins", coins)

    def __len__(self) -> int:
        return len(self.coins)

    def __iter__(self) -> Iterator[int]:
        return iter(self.coins)

    def __contains__(self, square: int) -> bool:
        return square in self.coins

    def __repr__(self) -> str:
        return f"Position({list(self.coins)})"


@dataclass(frozen=True)
class Partition:
    """Weakly decreasing tuple of positive parts; trailing zeros dropped."""

    parts: tuple[int, ...]

    def __init__(self, parts: Iterable[int] = ()) -> None:
        parts = tuple(int(v) for v in parts)
        while parts and parts[-1] == 0:
            parts = parts[:-1]
        if any(v <= 0 for v in parts):
            raise ValueError(f"parts must be positive, got {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise ValueError(f"parts must be weakly decreasing, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def __len__(self) -> int:
        return len(self.parts)

    def __iter__(self) -> Iterator[int]:
        return iter(self.parts)

    def __bool__(self) -> bool:
        return bool(self.parts)

    def __repr__(self) -> str:
        return f"Partition({list(self.parts)})"


@dataclass(frozen=True)
class Tower:
    """Row sizes of the iterated-core tower, trailing zero rows trimmed.

    Rows are indexed like digits (row L weights p**L) but may exceed the
    base; indexing past the stored rows reads as zero.
    """

    rows: tuple[int, ...]

    def __init__(self, rows: Iterable[int] = ()) -> None:
        rows = tuple(int(r) for r in rows)
        if any(r < 0 for r in rows):
            raise ValueError(f"tower rows must be non-negative, got {rows}")
        while rows and rows[-1] == 0:
            rows = rows[:-1]
        object.__setattr__(self, "rows", rows)

    def __getitem__(self, L: int) -> int:
        return self.rows[L] if 0 <= L < len(self.rows) else 0

    def tail(self, L: int) -> tuple[int, ...]:
        """Rows from index L upward (the part weighting p**L and beyond)."""
        return self.rows[L:] if L >= 0 else (0,) * -L + self.rows

    def __len__(self) -> int:
        return len(self.rows)

    def __iter__(self) -> Iterator[int]:
        return iter(self.rows)

    def __repr__(self) -> str:
        return f"Tower({list(self.rows)})"


@dataclass(frozen=True, order=True)
class ResidueKey:
    """Element of (Z_p)^L: the low L digits of a coin, little-endian.

    Ordering is lexicographic on the digit tuple (lowest digit first),
    which fixes the iteration order of decompositions.
    """

    digits: tuple[int, ...]
    base: int

    def __init__(self, digits: Iterable[int], base: int) -> None:
        check_base(base)
        digits = tuple(int(d) for d in digits)
        if any(not 0 <= d < base for d in digits):
            raise ValueError(f"residue digits {digits} out of range for base {base}")
        object.__setattr__(self, "digits", digits)
        object.__setattr__(self, "base", base)

    @classmethod
    def from_int(cls, value: int, depth: int, base: int) -> "ResidueKey":
        check_base(base)
        if not 0 <= value < base**depth:
            raise ValueError(f"residue {value} out of range for depth {depth}")
        digits = []
        for _ in range(depth):
            value, d = divmod(value, base)
            digits.append(d)
        return cls(digits, base)

    @property
    def depth(self) -> int:
        return len(self.digits)

    @property
    def value(self) -> int:
        return sum(d * self.base**i for i, d in enumerate(self.digits))


def lambda_size(X: Position) -> int:
    """Diagram size of a position: sum of coins minus the staircase."""
    m = len(X)
    return sum(X.coins) - m * (m - 1) // 2


def is_terminal(X: Position) -> bool:
    """True iff the diagram is empty (the coins form the staircase 0..m-1)."""
    return lambda_size(X) == 0


def partition_of(X: Position) -> Partition:
    """Partition attached to a position; inverse of :func:`position_of`."""
    m = len(X)
    desc = sorted(X.coins, reverse=True)
    return Partition(desc[i] - m + (i + 1) for i in range(m))


def position_of(lam: Partition, m: int) -> Position:
    """Position with m coins whose partition is ``lam``.

    This is the m-coin representative: the minimal one extended by a
    staircase, i.e. a shift of ``position_of(lam, len(lam))``.
    """
    if m < len(lam):
        raise ValueError(f"need at least {len(lam)} coins for {lam!r}, got m={m}")
    padded = lam.parts + (0,) * (m - len(lam))
    return Position(padded[i] + m - (i + 1) for i in range(m))


def shift(X: Position, n: int) -> Position:
    """Add an n-step staircase below: {0..n-1} plus every coin raised by n."""
    if n < 0:
        raise ValueError("shift amount must be non-negative")
    return Position(tuple(range(n)) + tuple(c + n for c in X.coins))


def reduce(X: Position) -> tuple[Position, int]:
    """Strip the maximal staircase: the unique (Y, n) with X = shift(Y, n)
    and 0 not a coin of Y."""
    n = 0
    while n < len(X.coins) and X.coins[n] == n:
        n += 1
    return Position(c - n for c in X.coins[n:]), n


def conjugate(lam: Partition) -> Partition:
    """Transposed diagram (column lengths)."""
    if not lam:
        return Partition()
    return Partition(sum(1 for v in lam.parts if v >= j) for j in range(1, lam.parts[0] + 1))


def hook_lengths(lam: Partition) -> tuple[int, ...]:
    """Multiset of hook lengths, one per cell, as a sorted tuple."""
    conj = conjugate(lam).parts
    lengths = [
        lam.parts[i] - (j + 1) + conj[j] - (i + 1) + 1
        for i in range(len(lam.parts))
        for j in range(lam.parts[i])
    ]
    return tuple(sorted(lengths))


def hook_count(X: Position, L: int, p: int) -> int:
    """Number of hooks whose length is divisible by p**L.

    Computed from the coins: the quotients of the coins by p**L, minus one
    pair count per residue class.  Equals the divisibility count over
    :func:`hook_lengths`, which the tests use as the independent oracle.
    """
    check_base(p)
    if L < 0:
        raise ValueError("hook depth must be non-negative")
    mod = p**L
    class_sizes = Counter(c % mod for c in X.coins)
    return sum(c // mod for c in X.coins) - sum(n * (n - 1) // 2 for n in class_sizes.values())


def decompose(X: Position, L: int, p: int) -> dict[ResidueKey, Position]:
    """Split a position by the low L digits of its coins.

    Every residue key in (Z_p)^L is present (possibly with an empty
    sub-position); each sub-position holds the coin quotients.  Keys are
    in lexicographic lowest-digit-first order.
    """
    check_base(p)
    if L < 0:
        raise ValueError("decomposition depth must be non-negative")
    mod = p**L
    buckets: dict[int, list[int]] = {}
    for c in X.coins:
        buckets.setdefault(c % mod, []).append(c // mod)
    return {
        ResidueKey(key_digits, p): Position(buckets.get(_key_value(key_digits, p), ()))
        for key_digits in product(range(p), repeat=L)
    }


def _key_value(digits: tuple[int, ...], p: int) -> int:
    return sum(d * p**i for i, d in enumerate(digits))


def assemble(parts: Mapping[ResidueKey, Position]) -> Position:
    """Inverse of :func:`decompose`: coin = residue + p**L * quotient."""
    if not parts:
        raise ValueError("cannot assemble an empty key map")
    depths = {key.depth for key in parts}
    bases = {key.base for key in parts}
    if len(depths) != 1 or len(bases) != 1:
        raise ValueError("all residue keys must share one depth and one base")
    (L,) = depths
    (p,) = bases
    coins = [key.value + p**L * q for key, sub in parts.items() for q in sub.coins]
    return Position(coins)


def p_core(X: Position, p: int) -> Position:
    """Position left after removing all p-hooks from the diagram.

    Each length-1 residue class collapses to its bottom |X_r| quotients;
    the coin count is preserved and no hook of the result divides by p.
    """
    check_base(p)
    class_sizes = Counter(c % p for c in X.coins)
    return Position(r + p * j for r, n in class_sizes.items() for j in range(n))


def tower(X: Position, p: int) -> Tower:
    """Tower of a position: row L sums the core sizes at decomposition depth L."""
    check_base(p)
    if is_terminal(X):
        return Tower()
    depth_limit = len(digits_of(max(X.coins), p))
    rows = []
    for L in range(depth_limit + 1):
        mod = p**L
        buckets: dict[int, list[int]] = {}
        for c in X.coins:
            buckets.setdefault(c % mod, []).append(c // mod)
        rows.append(sum(_core_size(quotients, p) for quotients in buckets.values()))
    return Tower(rows)


def _core_size(coins: list[int], p: int) -> int:
    """Diagram size of the p-core of the position with the given coins."""
    class_sizes = Counter(c % p for c in coins)
    total = sum(r * n + p * n * (n - 1) // 2 for r, n in class_sizes.items())
    m = len(coins)
    return total - m * (m - 1) // 2


def congruent(X: Position, Y: Position, N: int, p: int) -> bool:
    """True iff X and Y have equally many coins in every depth-N residue class.

    Congruent positions agree on tower rows below N.
    """
    check_base(p)
    if N < 0:
        raise ValueError("congruence depth must be non-negative")
    mod = p**N
    return Counter(c % mod for c in X.coins) == Counter(c % mod for c in Y.coins)


def partitions_of(n: int) -> Iterator[Partition]:
    """All partitions of n, parts weakly decreasing, in lexicographic
    descending order of part tuples."""
    if n < 0:
        raise ValueError("cannot partition a negative integer")

    def rec(remaining: int, cap: int, acc: list[int]) -> Iterator[Partition]:
        if remaining == 0:
            yield Partition(acc)
            return
        for v in range(min(cap, remaining), 0, -1):
            acc.append(v)
            yield from rec(remaining - v, v, acc)
            acc.pop()

    yield from rec(n, n, [])


def subpartitions(lam: Partition) -> Iterator[Partition]:
    """All partitions contained cellwise in ``lam`` (including empty and lam)."""

    def rec(i: int, cap: int, acc: list[int]) -> Iterator[Partition]:
        yield Partition(acc)
        if i == len(lam.parts):
            return
        for v in range(1, min(lam.parts[i], cap) + 1):
            acc.append(v)
            yield from rec(i + 1, v, acc)
            acc.pop()

    yield from rec(0, lam.parts[0] if lam else 0, [])


def corner_removals(lam: Partition) -> list[Partition]:
    """Partitions obtained by removing one removable cell from ``lam``."""
    out = []
    parts = lam.parts
    for i in range(len(parts)):
        if i + 1 == len(parts) or parts[i] > parts[i + 1]:
            out.append(Partition(parts[:i] + (parts[i] - 1,) + parts[i + 1 :]))
    return out
