"""Tower-aware move analysis: orders, graded options, peak digits.

The tower of a position decides how its Sprague-Grundy value reacts to a
single-coin slide.  The *order* of a position is the lowest nonzero tower
row.  A slide x -> x - p**H is a *graded option of depth H* when it
decrements (mod p) every tower row from H up to the order and does not
lower the remaining tail; depth-equals-order options ("at-order" options)
always exist at non-terminal positions and are the steps from which the
deeper structural lemmas are assembled.  Everything here is exposed as an
executable predicate so those lemmas can be swept exhaustively at desk
scale.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import board, grundy
from .board import Position, Tower
from .errors import CapExceeded, WitnessNotFound
from .padic import INFINITY, Order, check_base, digits_of, seq_le, seq_less
from .reports import VerificationReport

PEAK_DIGIT_CAP = 16


def position_order(X: Position, p: int) -> Order:
    """Index of the lowest nonzero tower row; INFINITY for terminal positions."""
    t = board.tower(X, p)
    for L, row in enumerate(t.rows):
        if row:
            return L
    return INFINITY


@dataclass(frozen=True)
class OptionKind:
    """Classification of a graded single-coin option."""

    depth: int
    at_order: bool


def option_kind(X: Position, Y: Position, p: int) -> OptionKind | None:
    """Classify Y as a graded option of X, or return None.

    Y must be X with one coin x lowered by an exact power p**H onto a free
    square.  It qualifies when tower rows H..order(X) each drop by one
    mod p and the tail above the order does not decrease.  Terminal X has
    no options, graded or otherwise, so the answer is None.
    """
    check_base(p)
    M = position_order(X, p)
    if M is INFINITY:
        return None
    removed = set(X.coins) - set(Y.coins)
    added = set(Y.coins) - set(X.coins)
    if len(removed) != 1 or len(added) > 1 or len(X) != len(Y):
        return None
    (x,) = removed
    y = added.pop() if added else None
    if y is None or y >= x:
        return None
    step = x - y
    depth = 0
    while step % p == 0:
        step //= p
        depth += 1
    if step != 1:
        return None

    tX = board.tower(X, p)
    tY = board.tower(Y, p)
    for L in range(depth, M + 1):
        if (tY[L] - tX[L]) % p != p - 1:
            return None
    if not seq_le(tX.tail(M + 1), tY.tail(M + 1)):
        return None
    return OptionKind(depth=depth, at_order=(depth == M))


def step_options(X: Position, p: int, depth: int) -> list[Position]:
    """Graded options of X at the given depth, sorted by resulting coins."""
    check_base(p)
    if depth < 0:
        raise ValueError("depth must be non-negative")
    step = p**depth
    found = []
    for x in X.coins:
        y = x - step
        if y < 0 or y in X:
            continue
        Y = Position(tuple(c for c in X.coins if c != x) + (y,))
        kind = option_kind(X, Y, p)
        if kind is not None and kind.depth == depth:
            found.append(Y)
    return sorted(found, key=lambda pos: pos.coins)


def at_order_options(X: Position, p: int) -> list[Position]:
    """Graded options whose step is exactly p**order(X); empty for terminal X.

    Every non-terminal position has at least one (a swept lemma, asserted
    by the verification suite rather than assumed here).
    """
    M = position_order(X, p)
    if M is INFINITY:
        return []
    return step_options(X, p, M)


def _top_difference(a: Tower, b: Tower) -> int:
    for L in reversed(range(max(len(a.rows), len(b.rows)))):
        if a[L] != b[L]:
            return L
    return -1


def peak_digit(X: Position, p: int, cap: int = PEAK_DIGIT_CAP) -> int:
    """Highest tower row raisable along chains of at-order options.

    Scans every position reachable from X through at-order options; for
    those whose tower exceeds the tower of X (top differing row decides),
    records the top differing row, and returns the maximum, or -1 when no
    chain ever climbs.  Towers only depend on the diagram, so the scan
    deduplicates on staircase-reduced positions.
    """
    check_base(p)
    if board.lambda_size(X) > cap:
        raise CapExceeded(f"diagram size {board.lambda_size(X)} exceeds cap {cap}")
    tX = board.tower(X, p)
    start = board.reduce(X)[0]
    best = -1
    visited = {start.coins}
    stack = [start]
    while stack:
        Z = stack.pop()
        for Y in at_order_options(Z, p):
            R = board.reduce(Y)[0]
            if R.coins in visited:
                continue
            visited.add(R.coins)
            tY = board.tower(R, p)
            if seq_less(tX.rows, tY.rows):
                best = max(best, _top_difference(tX, tY))
            stack.append(R)
    return best


def residue_imbalance(X: Position, p: int, n: int | None = None) -> bool:
    """Adjacent residue classes of X differ at depth order(X).

    After padding X with a staircase so the coin count is divisible by
    p**order(X), compares consecutive length-1 residue classes (wrapping
    mod p) for congruence at depth order(X); any mismatch is an imbalance.
    The outcome does not depend on which qualifying padding is used (a
    tested property); ``n`` overrides the default minimal padding.
    Positions of order zero are always imbalanced, and terminal positions
    never are.
    """
    check_base(p)
    M = position_order(X, p)
    if M is INFINITY:
        return False
    mod = p**M
    if n is None:
        n = (-len(X)) % mod
    elif n < 0 or (len(X) + n) % mod:
        raise ValueError(f"padding {n} does not make the coin count divisible by {mod}")
    S = board.shift(X, n)
    classes = board.decompose(S, 1, p)
    by_residue = {key.value: sub for key, sub in classes.items()}
    return any(
        not board.congruent(by_residue[(s - 1) % p], by_residue[s], M, p)
        for s in range(p)
    )


def rounded_path(
    X: Position, N: int, p: int, max_steps: int | None = None
) -> list[Position]:
    """Chain of at-order options from X (first option in sorted order at
    each step) ending at the first position of order at least N."""
    check_base(p)
    if N < 0:
        raise ValueError("target order must be non-negative")
    path = [X]
    while position_order(path[-1], p) < N:
        options = at_order_options(path[-1], p)
        if not options:
            raise WitnessNotFound(
                f"non-terminal position {path[-1]} has no at-order option"
            )
        path.append(options[0])
        if max_steps is not None and len(path) - 1 > max_steps:
            raise CapExceeded(f"no order->{N} descendant within {max_steps} steps")
    return path


def rounded_descendant(
    X: Position, N: int, p: int, max_steps: int | None = None
) -> Position:
    """Endpoint of :func:`rounded_path`: the first at-order descendant whose
    order reaches N; every earlier position on the path has order below N."""
    return rounded_path(X, N, p, max_steps)[-1]


def hook_count_delta(X: Position, x: int, step: int, level: int, p: int) -> int:
    """Change in the level-divisible hook count under the slide x -> x - p**step.

    At or below the step depth the count drops by an exact power of p;
    above it, the change is read off the residue-class sizes of x and its
    target, with a correction when all digits of x between the step and the
    level vanish (the borrow then reaches the level).  Must agree with
    recomputing the hook count from scratch, which is the tested oracle.
    """
    check_base(p)
    if step < 0 or level < 0:
        raise ValueError("step and level must be non-negative")
    if x not in X:
        raise ValueError(f"coin {x} is not on the board")
    y = x - p**step
    if y < 0 or y in X:
        raise ValueError(f"slide {x} -> {y} is not available")
    if level <= step:
        return -(p ** (step - level))
    mod = p**level
    size_from = sum(1 for c in X.coins if c % mod == x % mod)
    size_to = sum(1 for c in X.coins if c % mod == y % mod)
    borrow_reaches_level = 1 if (x // p**step) % p ** (level - step) == 0 else 0
    return size_from - size_to - borrow_reaches_level - 1


def _positions_under(size_cap: int) -> list[Position]:
    out = []
    for n in range(size_cap + 1):
        for lam in board.partitions_of(n):
            out.append(board.position_of(lam, len(lam)))
    return out


def verify_lemmas(p: int, size_cap: int) -> VerificationReport:
    """Exhaustive desk-scale sweep of the structural lemmas on towers.

    For every diagram up to ``size_cap`` (canonical position plus a
    staircase-shifted copy for the shift-sensitive predicates):

    - every non-terminal position has an at-order option;
    - the tower never exceeds the digits of the diagram size;
    - residue imbalance forces a depth-0 graded option;
    - an at-order option keeps the tower above max(peak, order) and never
      raises the peak digit;
    - a positive peak digit K yields a descendant of order exactly K whose
      row K climbs (to p or within (row_K(X), p)), whose tail above K is
      unchanged, and which is imbalanced;
    - the padding independence of the imbalance predicate;
    - positions with row(order) = p, a reduced tail, and imbalance have a
      depth-0 option landing one below the diagram size, and their tight
      maximum is exactly size - 1.
    """
    report = VerificationReport("lemmas", {"p": p, "size_cap": size_cap})
    for X in _positions_under(size_cap):
        report.checked += 1
        tX = board.tower(X, p)
        size = board.lambda_size(X)
        M = position_order(X, p)
        terminal = M is INFINITY

        for candidate in (X, board.shift(X, 1)):
            if not terminal and not at_order_options(candidate, p):
                report.record_failure(check="at_order_exists", coins=list(candidate.coins))
                return report
            if seq_less(digits_of(size, p), board.tower(candidate, p).rows):
                report.record_failure(check="tower_below_size", coins=list(candidate.coins))
                return report
            if residue_imbalance(candidate, p) and not step_options(candidate, p, 0):
                report.record_failure(check="imbalance_gives_depth0", coins=list(candidate.coins))
                return report

        if terminal:
            continue

        # Padding independence of the imbalance predicate.
        assert isinstance(M, int)
        n0 = (-len(X)) % p**M
        if residue_imbalance(X, p, n=n0) != residue_imbalance(X, p, n=n0 + p**M):
            report.record_failure(check="imbalance_padding_independent", coins=list(X.coins))
            return report

        pk = peak_digit(X, p)
        N = max(pk, M) + 1
        for Y in at_order_options(X, p):
            tY = board.tower(Y, p)
            if tY.tail(N) != tX.tail(N):
                report.record_failure(
                    check="tail_stable_above_peak", coins=list(X.coins), option=list(Y.coins)
                )
                return report
            if peak_digit(Y, p) > pk:
                report.record_failure(
                    check="peak_monotone", coins=list(X.coins), option=list(Y.coins)
                )
                return report

        if pk > 0 and not _climbing_descendant_exists(X, tX, pk, p):
            report.record_failure(check="peak_climb_descendant", coins=list(X.coins))
            return report

        if (
            tX[M] == p
            and all(row < p for row in tX.tail(M + 1))
            and residue_imbalance(X, p)
        ):
            want = size - 1
            hits = [
                Y
                for Y in step_options(X, p, 0)
                if grundy.sg_tower(Y, p).value == want
            ]
            if not hits:
                report.record_failure(check="flat_tail_depth0_value", coins=list(X.coins))
                return report
            if grundy.max_tight_sg(X, p, cap=max(16, size_cap)) != want:
                report.record_failure(check="flat_tail_tight_max", coins=list(X.coins))
                return report
    return report


def _climbing_descendant_exists(X: Position, tX: Tower, pk: int, p: int) -> bool:
    """Search the diagrams inside X for the four-property descendant that a
    positive peak digit guarantees."""
    lam = board.partition_of(X)
    for mu in board.subpartitions(lam):
        Y = board.position_of(mu, len(mu))
        if position_order(Y, p) != pk:
            continue
        tY = board.tower(Y, p)
        climbs = (tX[pk] < tY[pk] < p) or tY[pk] == p
        if not climbs:
            continue
        if tY.tail(pk + 1) != tX.tail(pk + 1):
            continue
        if residue_imbalance(Y, p):
            return True
    return False
