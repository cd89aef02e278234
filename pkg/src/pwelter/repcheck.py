"""Degrees of symmetric-group irreducibles and their p-adic valuations.

Degrees come from the hook-length formula (n! over the product of hook
lengths, always an exact division).  For prime p, the valuation of the
degree is computed without materializing the degree, by subtracting hook
valuations from the factorial valuation; Macdonald's criterion relates a
vanishing valuation to the Sprague-Grundy value of the attached position
hitting the diagram size, and the restriction statement asks for a
contained diagram of size sg whose degree is prime to p.  Both directions
are computed independently here so the equivalence is checked, never
assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, prod

from . import board, grundy
from .board import Partition
from .errors import CapExceeded, WitnessNotFound
from .reports import VerificationReport

DEGREE_CAP = 40
WITNESS_CAP = 24


def require_prime(p: int) -> None:
    """Primality gate: the degree statements need prime p, unlike the
    Sprague-Grundy formula which holds for every base."""
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        raise ValueError(f"expected a prime, got {p!r}")
    d = 2
    while d * d <= p:
        if p % d == 0:
            raise ValueError(f"expected a prime, got {p} = {d} * {p // d}")
        d += 1


@dataclass(frozen=True)
class DegreeInfo:
    """Degree data for one diagram: exact value (optional) and p-valuation."""

    partition: Partition
    degree: int | None
    valuation: int


def degree_exact(lam: Partition, cap: int = DEGREE_CAP) -> int:
    """Exact degree by the hook-length formula (arbitrary precision)."""
    n = lam.size
    if n > cap:
        raise CapExceeded(f"diagram size {n} exceeds degree cap {cap}")
    hooks = board.hook_lengths(lam)
    numerator = factorial(n)
    denominator = prod(hooks) if hooks else 1
    quotient, remainder = divmod(numerator, denominator)
    assert remainder == 0, f"hook product must divide {n}! exactly"
    return quotient


def _factorial_valuation(n: int, p: int) -> int:
    total = 0
    q = p
    while q <= n:
        total += n // q
        q *= p
    return total


def _int_valuation(x: int, p: int) -> int:
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


def degree_valuation(lam: Partition, p: int) -> int:
    """p-adic valuation of the degree, without computing the degree.

    Factorial valuation minus the summed hook valuations; non-negative
    because the degree is an integer.
    """
    require_prime(p)
    n = lam.size
    value = _factorial_valuation(n, p) - sum(
        _int_valuation(h, p) for h in board.hook_lengths(lam)
    )
    assert value >= 0, "degree valuation cannot be negative"
    return value


def degree_info(lam: Partition, p: int, cap: int = DEGREE_CAP) -> DegreeInfo:
    """Valuation always; the exact degree only within the cap."""
    valuation = degree_valuation(lam, p)
    degree = degree_exact(lam, cap) if lam.size <= cap else None
    return DegreeInfo(partition=lam, degree=degree, valuation=valuation)


def macdonald_prime_to_p(lam: Partition, p: int) -> bool:
    """Game-side criterion for the degree being prime to p.

    Computed from the Sprague-Grundy value of the attached position (value
    equals diagram size); whether this matches the valuation side is a
    verified theorem, so the two computations stay independent.
    """
    require_prime(p)
    X = board.position_of(lam, len(lam))
    return grundy.sg_tower(X, p).value == lam.size


def corollary_witness(lam: Partition, p: int, cap: int = WITNESS_CAP) -> Partition:
    """Contained diagram of size sg(lam) whose degree is prime to p.

    Searched by walking down from lam one removable cell at a time
    (breadth-first by size), then testing valuations at the target size.
    Existence is guaranteed, so exhaustion raises WitnessNotFound and the
    sweep records it as a verification failure.
    """
    require_prime(p)
    if lam.size > cap:
        raise CapExceeded(f"diagram size {lam.size} exceeds witness cap {cap}")
    X = board.position_of(lam, len(lam))
    target = grundy.sg_tower(X, p).value
    level = {lam}
    while level and next(iter(level)).size > target:
        level = {mu for nu in level for mu in board.corner_removals(nu)}
    for mu in sorted(level, key=lambda m: m.parts, reverse=True):
        if degree_valuation(mu, p) == 0:
            return mu
    raise WitnessNotFound(
        f"no contained diagram of size {target} with degree prime to {p} under {lam!r}"
    )


def verify_macdonald(n_max: int, p: int) -> VerificationReport:
    """Equivalence sweep: valuation zero iff the game value fills the diagram."""
    require_prime(p)
    report = VerificationReport("macdonald", {"p": p, "n_max": n_max})
    for n in range(n_max + 1):
        for lam in board.partitions_of(n):
            prime_by_valuation = degree_valuation(lam, p) == 0
            prime_by_game = macdonald_prime_to_p(lam, p)
            report.checked += 1
            if prime_by_valuation != prime_by_game:
                report.record_failure(
                    partition=list(lam.parts),
                    valuation_zero=prime_by_valuation,
                    game_tight=prime_by_game,
                )
                return report
    return report


def verify_corollary(n_max: int, p: int) -> VerificationReport:
    """Both statements at desk scale: the equivalence, and a restriction
    witness for every diagram."""
    require_prime(p)
    report = VerificationReport("corollary", {"p": p, "n_max": n_max})
    equivalence = verify_macdonald(n_max, p)
    report.checked += equivalence.checked
    if not equivalence.passed:
        report.failures.extend(equivalence.failures)
        return report
    for n in range(n_max + 1):
        for lam in board.partitions_of(n):
            X = board.position_of(lam, len(lam))
            target = grundy.sg_tower(X, p).value
            try:
                mu = corollary_witness(lam, p, cap=max(WITNESS_CAP, n_max))
            except WitnessNotFound:
                report.record_failure(partition=list(lam.parts), witness="not found")
                return report
            report.checked += 1
            ok = (
                mu.size == target
                and degree_valuation(mu, p) == 0
                and _contained(mu, lam)
            )
            if not ok:
                report.record_failure(
                    partition=list(lam.parts), witness=list(mu.parts), target=target
                )
                return report
    return report


def _contained(mu: Partition, lam: Partition) -> bool:
    if len(mu) > len(lam):
        return False
    return all(mu.parts[i] <= lam.parts[i] for i in range(len(mu)))
