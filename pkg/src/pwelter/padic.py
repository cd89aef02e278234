"""Carry-free base-p integer arithmetic and digit manipulation.

Digit sequences are little-endian throughout the package: index L holds the
coefficient of p**L.  Addition and subtraction act digitwise modulo p, with
no carries or borrows, so the non-negative integers form a group under
``oplus`` for every base p >= 2 (prime or not).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, Union


class _Infinity:
    """Order of zero: a distinguished value above every integer."""

    __slots__ = ()
    _instance = None

    def __new__(cls) -> "_Infinity":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFINITY"

    def __eq__(self, other: object) -> bool:
        return isinstance(other, _Infinity)

    def __hash__(self) -> int:
        return hash((_Infinity, "infinite-order"))

    def __lt__(self, other: object):
        if isinstance(other, (int, _Infinity)):
            return False
        return NotImplemented

    def __le__(self, other: object):
        if isinstance(other, _Infinity):
            return True
        if isinstance(other, int):
            return False
        return NotImplemented

    def __gt__(self, other: object):
        if isinstance(other, _Infinity):
            return False
        if isinstance(other, int):
            return True
        return NotImplemented

    def __ge__(self, other: object):
        if isinstance(other, (int, _Infinity)):
            return True
        return NotImplemented


INFINITY = _Infinity()

#: Result type of :func:`ordp`: a non-negative int, or INFINITY for 0.
Order = Union[int, _Infinity]


def check_base(p: int) -> None:
    """Reject bases below 2."""
    if not isinstance(p, int) or isinstance(p, bool) or p < 2:
        raise ValueError(f"base must be an integer >= 2, got {p!r}")


def digits_of(x: int, p: int) -> tuple[int, ...]:
    """Little-endian base-p digits of a natural number, no trailing zeros."""
    check_base(p)
    if x < 0:
        raise ValueError(f"expected a non-negative integer, got {x}")
    digits = []
    while x:
        x, d = divmod(x, p)
        digits.append(d)
    return tuple(digits)


def from_digits(digits: Iterable[int], p: int) -> int:
    """Inverse of :func:`digits_of`; accepts trailing zeros."""
    check_base(p)
    value = 0
    for weight, d in enumerate(digits):
        if not 0 <= d < p:
            raise ValueError(f"digit {d} out of range for base {p}")
        value += d * p**weight
    return value


@dataclass(frozen=True)
class DigitSeq:
    """Canonical little-endian digit vector of a natural number in base p."""

    digits: tuple[int, ...]
    base: int

    def __post_init__(self) -> None:
        check_base(self.base)
        digits = tuple(int(d) for d in self.digits)
        if any(not 0 <= d < self.base for d in digits):
            raise ValueError(f"digits {digits} out of range for base {self.base}")
        if digits and digits[-1] == 0:
            raise ValueError("digit sequence must not have trailing zeros")
        object.__setattr__(self, "digits", digits)

    @classmethod
    def from_int(cls, x: int, p: int) -> "DigitSeq":
        return cls(digits_of(x, p), p)

    @property
    def value(self) -> int:
        return from_digits(self.digits, self.base)

    def __getitem__(self, L: int) -> int:
        return self.digits[L] if 0 <= L < len(self.digits) else 0

    def __len__(self) -> int:
        return len(self.digits)

    def __iter__(self):
        return iter(self.digits)


def oplus(x: int, y: int, p: int, *more: int) -> int:
    """Digitwise sum modulo p (no carries); commutative and associative."""
    check_base(p)
    terms = (x, y, *more)
    if any(t < 0 for t in terms):
        raise ValueError("carry-free addition is defined on non-negative integers")
    result = 0
    weight = 1
    while any(terms):
        result += (sum(t % p for t in terms) % p) * weight
        terms = tuple(t // p for t in terms)
        weight *= p
    return result


def ominus(x: int, y: int, p: int) -> int:
    """Digitwise difference modulo p (no borrows); zero iff x == y."""
    check_base(p)
    if x < 0 or y < 0:
        raise ValueError("carry-free subtraction is defined on non-negative integers")
    result = 0
    weight = 1
    while x or y:
        result += ((x - y) % p) * weight
        x, y, weight = x // p, y // p, weight * p
    return result


def ordp(x: int, p: int) -> Order:
    """Largest L with p**L dividing x; INFINITY for x == 0."""
    check_base(p)
    if x == 0:
        return INFINITY
    x = abs(x)
    order = 0
    while x % p == 0:
        x //= p
        order += 1
    return order


def repunit(x: int, p: int) -> int:
    """Carry-free difference of consecutive integers, x ominus (x - 1).

    Subtracting 1 without borrows clears the low zero digits of x to p - 1
    and lowers the first nonzero digit by one, so the difference is the
    base-p repunit 1 + p + ... + p**ordp(x).
    """
    check_base(p)
    if x <= 0:
        raise ValueError(f"expected a positive integer, got {x}")
    order = ordp(x, p)
    assert isinstance(order, int)
    return (p ** (order + 1) - 1) // (p - 1)


def seq_less(a: Sequence[int] | Iterable[int], b: Sequence[int] | Iterable[int]) -> bool:
    """Strict total order on digit/row sequences, highest differing index first.

    Entries need not be below any base (core-tower rows can exceed p); the
    shorter sequence is padded with zeros.
    """
    a = tuple(a)
    b = tuple(b)
    for L in reversed(range(max(len(a), len(b)))):
        av = a[L] if L < len(a) else 0
        bv = b[L] if L < len(b) else 0
        if av != bv:
            return av < bv
    return False


def seq_le(a: Sequence[int] | Iterable[int], b: Sequence[int] | Iterable[int]) -> bool:
    """Reflexive companion of :func:`seq_less` (total, so not-greater)."""
    return not seq_less(b, a)
