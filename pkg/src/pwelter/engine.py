"""Operational game semantics: legal moves, the mex oracle, saturation scans.

Games are played on m-tuples of non-negative integers.  A move lowers
fewer than k coins (the index), never raises a coin, and the total amount
removed must have the same p-adic order as the smallest per-coin decrease,
so removals cannot hide a small change inside a large one.  Welter play
additionally keeps all coins on distinct squares; Nim play does not.

The oracle computes Sprague-Grundy values directly from the game graph by
memoized mex recursion and knows nothing about the closed forms; the sweep
commands pit the two against each other.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from itertools import combinations, combinations_with_replacement, product
from typing import Iterable, Iterator, Sequence

from . import board, grundy
from .board import Position
from .errors import OracleBoundExceeded
from .padic import INFINITY, check_base, oplus, ordp
from .reports import VerificationReport

DEFAULT_ORACLE_BOUND = 64

CoinTuple = tuple[int, ...]


class Variant(str, Enum):
    WELTER = "welter"
    NIM = "nim"


@dataclass(frozen=True)
class GameRules:
    """Parameters of one game: base p, index k, variant, and coin count m."""

    p: int
    k: int
    variant: Variant
    m: int

    def __post_init__(self) -> None:
        check_base(self.p)
        if self.k < 1:
            raise ValueError(f"index k must be at least 1, got {self.k}")
        if self.m < 0:
            raise ValueError(f"coin count must be non-negative, got {self.m}")


@dataclass(frozen=True)
class MoveDelta:
    """Per-coin decrease amounts of a candidate move."""

    amounts: tuple[int, ...]

    @classmethod
    def between(cls, X: Sequence[int], Y: Sequence[int]) -> "MoveDelta":
        if len(X) != len(Y):
            raise ValueError(f"positions must have equal length: {len(X)} vs {len(Y)}")
        return cls(tuple(x - y for x, y in zip(X, Y)))

    @property
    def moved(self) -> int:
        return sum(1 for d in self.amounts if d != 0)

    def order_condition(self, p: int) -> bool:
        """Order of the total decrease equals the minimum per-coin order."""
        total = sum(self.amounts)
        return ordp(total, p) == min((ordp(d, p) for d in self.amounts), default=INFINITY)


def _check_position(rules: GameRules, X: Sequence[int], name: str) -> CoinTuple:
    X = tuple(X)
    if len(X) != rules.m:
        raise ValueError(f"{name} has {len(X)} coins, rules expect {rules.m}")
    if any(not isinstance(c, int) or c < 0 for c in X):
        raise ValueError(f"{name} must consist of non-negative integers: {X}")
    return X


def violated_condition(rules: GameRules, X: Sequence[int], Y: Sequence[int]) -> int | str | None:
    """First violated move condition, or None when X -> Y is legal.

    Returns 1 (moved-coin count not in (0, k)), 2 (some coin raised),
    3 (order condition fails), or "distinct" (Welter target reuses a
    square).  The source position itself must be valid for the variant.
    """
    X = _check_position(rules, X, "source")
    Y = tuple(Y)
    if len(Y) != rules.m:
        raise ValueError(f"target has {len(Y)} coins, rules expect {rules.m}")
    if any(not isinstance(c, int) or c < 0 for c in Y):
        raise ValueError(f"target must consist of non-negative integers: {Y}")
    if rules.variant is Variant.WELTER and len(set(X)) != rules.m:
        raise ValueError(f"source {X} is not a Welter position (repeated square)")

    dist = sum(1 for x, y in zip(X, Y) if x != y)
    if not 0 < dist < rules.k:
        return 1
    if any(y > x for x, y in zip(X, Y)):
        return 2
    if rules.variant is Variant.WELTER and len(set(Y)) != rules.m:
        return "distinct"
    if not MoveDelta.between(X, Y).order_condition(rules.p):
        return 3
    return None


def is_legal(rules: GameRules, X: Sequence[int], Y: Sequence[int]) -> bool:
    return violated_condition(rules, X, Y) is None


def legal_moves(rules: GameRules, X: Sequence[int]) -> Iterator[CoinTuple]:
    """All legal options of X, by moved-coin count, then lexicographically."""
    X = _check_position(rules, X, "source")
    if rules.variant is Variant.WELTER and len(set(X)) != rules.m:
        raise ValueError(f"source {X} is not a Welter position (repeated square)")
    welter = rules.variant is Variant.WELTER
    for count in range(1, min(rules.k - 1, rules.m) + 1):
        batch: list[CoinTuple] = []
        for idxs in combinations(range(rules.m), count):
            # Targets run strictly below the current square, so the
            # decrease condition holds by construction.
            for targets in product(*(range(X[i]) for i in idxs)):
                Y = list(X)
                for i, t in zip(idxs, targets):
                    Y[i] = t
                if welter and len(set(Y)) != rules.m:
                    continue
                deltas = MoveDelta(tuple(x - y for x, y in zip(X, Y)))
                if deltas.order_condition(rules.p):
                    batch.append(tuple(Y))
        yield from sorted(batch)


class SgOracle:
    """Memoized mex recursion over the game graph.

    The bound is a hard error, not a truncation: cutting off the graph
    would silently corrupt mex values.  Memo keys are the raw coin tuples;
    symmetry and shift invariance are theorems the sweeps test, never
    assumptions baked into the cache.
    """

    def __init__(self, rules: GameRules, bound: int = DEFAULT_ORACLE_BOUND) -> None:
        if bound < 0:
            raise ValueError("oracle bound must be non-negative")
        self.rules = rules
        self.bound = bound
        self._memo: dict[CoinTuple, int] = {}

    def sg(self, X: Sequence[int]) -> int:
        X = _check_position(self.rules, X, "position")
        if any(c >= self.bound for c in X):
            raise OracleBoundExceeded(
                f"position {X} exceeds oracle bound {self.bound}"
            )
        return self._sg(X)

    def _sg(self, X: CoinTuple) -> int:
        cached = self._memo.get(X)
        if cached is not None:
            return cached
        seen = {self._sg(Y) for Y in legal_moves(self.rules, X)}
        value = 0
        while value in seen:
            value += 1
        self._memo[X] = value
        return value


_shared_oracles: dict[tuple[GameRules, int], SgOracle] = {}


def sg_oracle(rules: GameRules, X: Sequence[int], bound: int = DEFAULT_ORACLE_BOUND) -> int:
    """Sprague-Grundy value of X by game-graph mex, a pure function of
    (rules, X).  Oracles are shared per (rules, bound) so repeated queries
    reuse the memo."""
    oracle = _shared_oracles.get((rules, bound))
    if oracle is None:
        oracle = _shared_oracles.setdefault((rules, bound), SgOracle(rules, bound))
    return oracle.sg(X)


def welter_positions(m: int, bound: int) -> Iterator[CoinTuple]:
    """All m-coin Welter positions with coins < bound, as sorted tuples."""
    return combinations(range(bound), m)


def nim_positions(m: int, bound: int) -> Iterator[CoinTuple]:
    """All m-coin Nim positions (multisets) with coins < bound."""
    return combinations_with_replacement(range(bound), m)


def verify_saturation(p: int, m: int, bound: int) -> VerificationReport:
    """Oracle vs closed form over every Welter position with coins < bound.

    The oracle plays at index m + 1 (saturated play); the closed form is
    the tower value.  Composite p is as valid here as prime p.
    """
    report = VerificationReport("theorem11", {"p": p, "m": m, "bound": bound})
    rules = GameRules(p=p, k=m + 1, variant=Variant.WELTER, m=m)
    oracle = SgOracle(rules, bound)
    for coins in welter_positions(m, bound):
        got = oracle.sg(coins)
        want = grundy.sg_tower(Position(coins), p).value
        report.checked += 1
        if got != want:
            report.record_failure(coins=list(coins), oracle=got, closed_form=want)
            return report
    return report


def nim_check(p: int, m: int, k: int, bound: int) -> VerificationReport:
    """Oracle vs carry-free coin sum for Nim at index k, coins < bound."""
    report = VerificationReport("nim", {"p": p, "m": m, "k": k, "bound": bound})
    if k < min(p, m + 1):
        report.record_failure(
            reason=f"index {k} below min(p, m+1)={min(p, m + 1)}; formula not guaranteed"
        )
        return report
    rules = GameRules(p=p, k=k, variant=Variant.NIM, m=m)
    oracle = SgOracle(rules, bound)
    for coins in nim_positions(m, bound):
        got = oracle.sg(coins)
        want = 0
        for c in coins:
            want = oplus(want, c, p)
        report.checked += 1
        if got != want:
            report.record_failure(coins=list(coins), oracle=got, coin_sum=want)
            return report
    return report


def nim_witness_holds(p: int, m: int) -> bool:
    """At index min(p, m+1) - 1, the Nim position of k-1 heaps of size p
    (rest empty) has no option with carry-free coin sum zero."""
    if m < 1:
        return True
    k = min(p, m + 1)
    X = (p,) * (k - 1) + (0,) * (m - k + 1)
    rules = GameRules(p=p, k=k - 1, variant=Variant.NIM, m=m)
    for Y in legal_moves(rules, X):
        total = 0
        for c in Y:
            total = oplus(total, c, p)
        if total == 0:
            return False
    return True


def welter_witness_holds(p: int, m: int) -> bool:
    """At index min(p, m+1) - 1, the Welter position built from k-1
    consecutive coins starting at p (staircase-shifted to m coins) has no
    option of closed-form value zero."""
    if m < 1:
        return True
    k = min(p, m + 1)
    X = board.shift(Position(range(p, p + k - 1)), m - k + 1)
    if grundy.sg_tower(X, p).value != p * (k - 1):
        return False
    rules = GameRules(p=p, k=k - 1, variant=Variant.WELTER, m=m)
    for Y in legal_moves(rules, X.coins):
        if grundy.sg_tower(Position(Y), p).value == 0:
            return False
    return True


@dataclass
class SatIndexScan:
    """Empirical saturation-index evidence over a bounded region.

    ``lower`` is certified: indices below it demonstrably change the
    bounded Sprague-Grundy table or are excluded by a witness position.
    ``consistent_upper`` is only consistency: the smallest index whose
    bounded table matches index m + 1, which proves nothing beyond the
    region scanned.
    """

    p: int
    m: int
    bound: int
    lower: int
    consistent_upper: int
    disagreeing: list[int]
    nim_witness_ok: bool
    welter_witness_ok: bool

    def to_dict(self) -> dict[str, object]:
        return {
            "p": self.p,
            "m": self.m,
            "bound": self.bound,
            "lower": self.lower,
            "consistent_upper": self.consistent_upper,
            "disagreeing_indices": self.disagreeing,
            "nim_witness_ok": self.nim_witness_ok,
            "welter_witness_ok": self.welter_witness_ok,
            "caveat": "consistency within the scanned region only, not a proof",
        }


def empirical_sat_index(p: int, m: int, bound: int) -> SatIndexScan:
    """Scan Welter indices 2..m+1 over coins < bound and compare tables."""
    check_base(p)
    if m < 1:
        raise ValueError("need at least one coin to scan")
    roots = list(welter_positions(m, bound))

    def table(k: int) -> dict[CoinTuple, int]:
        oracle = SgOracle(GameRules(p=p, k=k, variant=Variant.WELTER, m=m), bound)
        return {coins: oracle.sg(coins) for coins in roots}

    reference = table(m + 1)
    disagreeing = [k for k in range(2, m + 1) if table(k) != reference]
    empirical_lower = max(disagreeing) + 1 if disagreeing else 2
    nim_ok = nim_witness_holds(p, m)
    welter_ok = welter_witness_holds(p, m)
    witness_lower = min(p, m + 1) if welter_ok else 2
    consistent_upper = empirical_lower
    return SatIndexScan(
        p=p,
        m=m,
        bound=bound,
        lower=max(empirical_lower, witness_lower),
        consistent_upper=consistent_upper,
        disagreeing=disagreeing,
        nim_witness_ok=nim_ok,
        welter_witness_ok=welter_ok,
    )


@dataclass(frozen=True)
class TableRow:
    coins: CoinTuple
    p: int
    k: int
    variant: str
    sg_oracle: int
    sg_closed: int


def sg_table(rules: GameRules, bound: int) -> list[TableRow]:
    """Oracle and closed-form values side by side for every position under
    the bound, in deterministic order."""
    oracle = SgOracle(rules, bound)
    if rules.variant is Variant.WELTER:
        roots: Iterable[CoinTuple] = welter_positions(rules.m, bound)
    else:
        roots = nim_positions(rules.m, bound)
    rows = []
    for coins in roots:
        if rules.variant is Variant.WELTER:
            closed = grundy.sg_tower(Position(coins), rules.p).value
        else:
            closed = 0
            for c in coins:
                closed = oplus(closed, c, rules.p)
        rows.append(
            TableRow(
                coins=coins,
                p=rules.p,
                k=rules.k,
                variant=rules.variant.value,
                sg_oracle=oracle.sg(coins),
                sg_closed=closed,
            )
        )
    return rows
