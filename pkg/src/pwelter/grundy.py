"""Closed-form Sprague-Grundy values for saturated Welter play.

Three equivalent expressions are implemented side by side: the tower route
(digits are tower rows reduced mod p), the coin route (carry-free sum of
the coins corrected by the pairwise-difference terms), and the hook route
(carry-free sum of one repunit per hook).  Their agreement, and agreement
with the game-graph oracle, is what the verification suites check.

A position is called *tight* here when its Sprague-Grundy value equals its
diagram size; the maximum Sprague-Grundy value among tight descendants of
a position is the quantity bounded by :func:`tight_sg_bound`.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from functools import lru_cache

from . import board
from .board import Partition, Position, Tower
from .errors import CapExceeded
from .padic import DigitSeq, check_base, ominus, oplus, repunit
from .reports import VerificationReport

MAX_TIGHT_SG_CAP = 16


@dataclass(frozen=True, eq=False)
class SgValue:
    """A Sprague-Grundy value with its base-p digit breakdown."""

    value: int
    digits: DigitSeq

    @property
    def base(self) -> int:
        return self.digits.base

    def __int__(self) -> int:
        return self.value

    def __index__(self) -> int:
        return self.value

    def __eq__(self, other: object) -> bool:
        if isinstance(other, SgValue):
            return self.value == other.value and self.base == other.base
        if isinstance(other, int):
            return self.value == other
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.value)

    def __repr__(self) -> str:
        return f"SgValue({self.value}, base={self.base})"


def _as_sg(value: int, p: int) -> SgValue:
    return SgValue(value, DigitSeq.from_int(value, p))


def sg_tower(X: Position, p: int) -> SgValue:
    """Sprague-Grundy value via the tower: digit L is row L reduced mod p."""
    t = board.tower(X, p)
    return _as_sg(sum((row % p) * p**L for L, row in enumerate(t.rows)), p)


def tower_residue(t: Tower, p: int) -> int:
    """Value of a tower after reducing every row mod p."""
    check_base(p)
    return sum((row % p) * p**L for L, row in enumerate(t.rows))


def sg_coins(X: Position, p: int) -> SgValue:
    """Sprague-Grundy value from the coins alone: the carry-free coin sum,
    minus (carry-free) one repunit per pair of coins."""
    check_base(p)
    coins = X.coins
    total = 0
    for c in coins:
        total = oplus(total, c, p)
    correction = 0
    for i in range(len(coins)):
        for j in range(i + 1, len(coins)):
            correction = oplus(correction, repunit(abs(coins[i] - coins[j]), p), p)
    return _as_sg(ominus(total, correction, p), p)


def sg_hooks(X: Position, p: int) -> SgValue:
    """Sprague-Grundy value as the carry-free sum of one repunit per hook."""
    check_base(p)
    total = 0
    for h in board.hook_lengths(board.partition_of(X)):
        total = oplus(total, repunit(h, p), p)
    return _as_sg(total, p)


def sg_welter2(X: Position) -> SgValue:
    """Classical binary Welter formula (base 2, where ominus == oplus)."""
    total = 0
    for c in X.coins:
        total = oplus(total, c, 2)
    for i in range(len(X.coins)):
        for j in range(i + 1, len(X.coins)):
            total = oplus(total, repunit(abs(X.coins[i] - X.coins[j]), 2), 2)
    return _as_sg(total, 2)


def winning_moves(X: Position, p: int, k: int, h: int, first_only: bool = False) -> list[Position]:
    """Legal options of X (index-k play) whose closed-form value is h.

    Single-coin options come first, then options by increasing moved-coin
    count.  Asking for h at or above the value of X returns the empty list
    with a warning: the search is meaningful for targets below sg(X), and
    saturated play (k >= m + 1) then guarantees a hit.
    """
    from .engine import GameRules, Variant, legal_moves

    sg_here = sg_tower(X, p).value
    if h < 0:
        raise ValueError("target value must be non-negative")
    if h >= sg_here:
        warnings.warn(
            f"no move with value {h} is guaranteed from a position of value {sg_here}",
            stacklevel=2,
        )
        return []
    rules = GameRules(p=p, k=k, variant=Variant.WELTER, m=len(X))
    found: list[Position] = []
    seen: set[tuple[int, ...]] = set()
    for option in legal_moves(rules, X.coins):
        key = tuple(sorted(option))
        if key in seen:
            continue
        seen.add(key)
        Y = Position(key)
        if sg_tower(Y, p).value == h:
            found.append(Y)
            if first_only:
                break
    return found


@lru_cache(maxsize=None)
def _sg_and_size(parts: tuple[int, ...], p: int) -> tuple[int, int]:
    lam = Partition(parts)
    X = board.position_of(lam, len(lam))
    return sg_tower(X, p).value, lam.size


def max_tight_sg(X: Position, p: int, cap: int = MAX_TIGHT_SG_CAP) -> int:
    """Maximum Sprague-Grundy value over tight descendants of X.

    Descendants are exactly the positions whose diagram sits inside the
    diagram of X, so the search enumerates contained partitions.  The empty
    descendant is tight with value 0, so the maximum always exists.
    """
    check_base(p)
    lam = board.partition_of(X)
    if lam.size > cap:
        raise CapExceeded(f"diagram size {lam.size} exceeds cap {cap}")
    best = 0
    for mu in board.subpartitions(lam):
        sg, size = _sg_and_size(mu.parts, p)
        if sg == size:
            best = max(best, sg)
    return best


def tight_sg_bound(X: Position, p: int, n: int | None = None) -> int | None:
    """Lower bound for :func:`max_tight_sg` from an oversized tower row.

    If row N of the tower is at least p + 1, the digits of the bound are
    p - 1 up to position N and the reduced tower rows above.  By default N
    is the largest qualifying row, which gives the strongest bound of the
    family; pass ``n`` to select a smaller qualifying row.
    """
    check_base(p)
    t = board.tower(X, p)
    qualifying = [L for L, row in enumerate(t.rows) if row >= p + 1]
    if not qualifying:
        if n is not None:
            raise ValueError(f"row {n} does not qualify (no row reaches {p + 1})")
        return None
    if n is None:
        n = max(qualifying)
    elif n not in qualifying:
        raise ValueError(f"row {n} does not qualify (needs a row >= {p + 1})")
    low = p ** (n + 1) - 1
    high = sum((t[L] % p) * p**L for L in range(n + 1, len(t.rows)))
    return low + high


def verify_tight_sg(p: int, size_cap: int, cap: int = MAX_TIGHT_SG_CAP) -> VerificationReport:
    """Sweep all diagrams up to ``size_cap``: the tight maximum sits between
    sg and the diagram size, and dominates the oversized-row bound."""
    report = VerificationReport("msg", {"p": p, "size_cap": size_cap})
    for n in range(size_cap + 1):
        for lam in board.partitions_of(n):
            X = board.position_of(lam, len(lam))
            sg = sg_tower(X, p).value
            best = max_tight_sg(X, p, cap=max(cap, size_cap))
            report.checked += 1
            if not sg <= best <= lam.size:
                report.record_failure(
                    partition=list(lam.parts), sg=sg, max_tight=best, size=lam.size
                )
                return report
            bound = tight_sg_bound(X, p)
            if bound is not None and best < bound:
                report.record_failure(
                    partition=list(lam.parts), max_tight=best, bound=bound
                )
                return report
    if p == 3 and size_cap >= 9:
        for coins, expected in (((3, 7), 8), ((3, 4, 5), 6)):
            got = max_tight_sg(Position(coins), p)
            report.checked += 1
            if got != expected:
                report.record_failure(coins=list(coins), max_tight=got, expected=expected)
                return report
        report.add_note("point values for {3,7} and {3,4,5} at p=3 included")
    return report
