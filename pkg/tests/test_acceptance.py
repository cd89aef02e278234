"""Acceptance suite: one test per exit criterion, exact tolerances.

Each test prints a single PASS line on success (run with ``pytest -s`` or
``-v`` to see them); a failure's assertion message carries the first
counterexample.
"""

import random

from pwelter import board, engine, grundy, repcheck, saturation
from pwelter.board import Partition, Position
from pwelter.engine import GameRules, SgOracle, Variant
from pwelter.padic import oplus


def _report(name: str, detail: str) -> None:
    print(f"ACCEPTANCE PASS: {name} ({detail})")


def test_theorem11_oracle_equivalence():
    """Oracle at saturated index equals all three closed forms; coins < 10,
    m in 1..3, bases 2..5 including composite 4; exact equality."""
    checked = 0
    for p in (2, 3, 4, 5):
        for m in (1, 2, 3):
            rules = GameRules(p=p, k=m + 1, variant=Variant.WELTER, m=m)
            oracle = SgOracle(rules, bound=10)
            for coins in engine.welter_positions(m, 10):
                X = Position(coins)
                got = oracle.sg(coins)
                t = grundy.sg_tower(X, p).value
                c = grundy.sg_coins(X, p).value
                h = grundy.sg_hooks(X, p).value
                assert got == t == c == h, (p, m, coins, got, t, c, h)
                checked += 1
    _report("theorem11 oracle equivalence", f"{checked} positions")


def test_classical_binary_formula():
    """The binary all-oplus formula matches the p=2 oracle; coins < 12,
    m <= 3; exact."""
    checked = 0
    for m in (1, 2, 3):
        rules = GameRules(p=2, k=2, variant=Variant.WELTER, m=m)
        oracle = SgOracle(rules, bound=12)
        for coins in engine.welter_positions(m, 12):
            assert oracle.sg(coins) == grundy.sg_welter2(Position(coins)).value, coins
            checked += 1
    _report("classical p=2 formula", f"{checked} positions")


def test_nim_formula_and_witness():
    """Nim at index min(p, m+1) has the carry-free coin sum as its value
    (coins <= 10, m <= 3, p <= 5), and at one index lower the all-p
    position has no zero-sum option; exact."""
    checked = 0
    for p in (2, 3, 4, 5):
        for m in (1, 2, 3):
            k = min(p, m + 1)
            rules = GameRules(p=p, k=k, variant=Variant.NIM, m=m)
            oracle = SgOracle(rules, bound=11)
            for coins in engine.nim_positions(m, 11):
                want = 0
                for c in coins:
                    want = oplus(want, c, p)
                assert oracle.sg(coins) == want, (p, m, k, coins)
                checked += 1
            assert engine.nim_witness_holds(p, m), (p, m)
    _report("nim saturation formula + witness", f"{checked} positions")


def test_point_values():
    """Named point values: the tower of {3,7} at p=3, the two tight maxima,
    and the legality pair in 2-coin play at p=2, k=3; exact."""
    assert board.tower(Position([3, 7]), 3).rows == (0, 3)
    assert grundy.max_tight_sg(Position([3, 7]), 3) == 8
    assert grundy.max_tight_sg(Position([3, 4, 5]), 3) == 6
    rules = GameRules(p=2, k=3, variant=Variant.WELTER, m=2)
    assert engine.is_legal(rules, (4, 3), (0, 1))
    assert not engine.is_legal(rules, (4, 3), (1, 0))
    _report("paper point values", "tower, tight maxima, legality pair")


def test_macdonald_and_corollary():
    """Valuation-zero iff game-tight for n <= 15 and p in {2,3,5}; a
    contained witness of size sg with unit valuation for n <= 12,
    p in {2,3}; exact."""
    checked_eq = 0
    for p in (2, 3, 5):
        for n in range(16):
            for lam in board.partitions_of(n):
                prime_to_p = repcheck.degree_valuation(lam, p) == 0
                tight = repcheck.macdonald_prime_to_p(lam, p)
                assert prime_to_p == tight, (p, lam.parts)
                checked_eq += 1
    checked_witness = 0
    for p in (2, 3):
        for n in range(13):
            for lam in board.partitions_of(n):
                mu = repcheck.corollary_witness(lam, p)
                X = board.position_of(lam, len(lam))
                assert mu.size == grundy.sg_tower(X, p).value, (p, lam.parts)
                assert repcheck.degree_valuation(mu, p) == 0, (p, lam.parts, mu.parts)
                assert all(
                    mu.parts[i] <= lam.parts[i] for i in range(len(mu))
                ), (p, lam.parts, mu.parts)
                checked_witness += 1
    _report(
        "macdonald + restriction witness",
        f"{checked_eq} equivalences, {checked_witness} witnesses",
    )


def test_oversized_row_bound():
    """Whenever a tower row reaches p + 1 (diagrams up to size 10, p in
    {2,3}), the tight maximum dominates the digit-patch bound; exact."""
    checked = 0
    for p in (2, 3):
        for n in range(11):
            for lam in board.partitions_of(n):
                X = board.position_of(lam, len(lam))
                bound = grundy.tight_sg_bound(X, p)
                if bound is None:
                    continue
                assert grundy.max_tight_sg(X, p) >= bound, (p, lam.parts, bound)
                checked += 1
    assert checked > 0
    _report("oversized-row lower bound", f"{checked} qualifying diagrams")


def test_tower_lemma_sweeps():
    """Structural lemma battery, exhaustive for diagrams up to size 8 at
    p=2 and size 9 at p=3: at-order options exist, towers stay below the
    size digits, imbalance forces a depth-0 option, tails are stable above
    max(peak, order), peak digits never increase along at-order options,
    and positive peaks yield the four-property climbing descendant."""
    for p, cap in ((2, 8), (3, 9)):
        report = saturation.verify_lemmas(p, cap)
        assert report.passed, report.summary()
    _report("tower lemma sweeps", "p=2 size<=8, p=3 size<=9")


def test_hook_delta_identity():
    """Closed-form hook-count change under a single-coin power slide equals
    direct recomputation on 10^4 random valid moves, coins < 100,
    p in {2,3,5}; exact."""
    rng = random.Random(20260811)
    checked = 0
    while checked < 10_000:
        p = rng.choice((2, 3, 5))
        m = rng.randint(1, 6)
        X = Position(rng.sample(range(100), m))
        x = rng.choice(X.coins)
        H = rng.randint(0, 4)
        y = x - p**H
        if y < 0 or y in X:
            continue
        L = rng.randint(0, 5)
        Y = Position(tuple(c for c in X.coins if c != x) + (y,))
        direct = board.hook_count(Y, L, p) - board.hook_count(X, L, p)
        assert saturation.hook_count_delta(X, x, H, L, p) == direct, (X, x, H, L, p)
        checked += 1
    _report("hook-delta identity", f"{checked} random moves")


def test_degree_branching_recursion():
    """Degree of every diagram up to size 12 equals the sum of degrees over
    one-cell removals; exact."""
    checked = 0
    for n in range(1, 13):
        for lam in board.partitions_of(n):
            total = sum(repcheck.degree_exact(mu) for mu in board.corner_removals(lam))
            assert repcheck.degree_exact(lam) == total, lam.parts
            checked += 1
    _report("degree branching recursion", f"{checked} diagrams")
