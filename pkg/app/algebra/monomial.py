from __future__ import annotations

from dataclasses import dataclass
from enum import Enum, IntEnum
from typing import Union

# Exponents live in the signed 64-bit range; anything larger is rejected, never wrapped.
MAX_EXPONENT = 2**63 - 1


class ExponentOverflowError(OverflowError):
    pass


class DomainMismatchError(ValueError):
    pass


class Cmp(IntEnum):
    LT = -1
    EQ = 0
    GT = 1


class MonomialOrder(str, Enum):
    """Lexicographic orders used throughout: w2 > w3, and a > w2 > w3 once a is adjoined."""

    LEX_W2_W3 = "LexW2W3"
    LEX_A_W2_W3 = "LexAW2W3"


def _check_exponent(name: str, value: int) -> None:
    if value < 0:
        raise ValueError(f"exponent {name} must be nonnegative, got {value}")
    if value > MAX_EXPONENT:
        raise ExponentOverflowError(f"exponent {name}={value} exceeds {MAX_EXPONENT}")


def _power(var: str, e: int) -> str:
    return var if e == 1 else f"{var}^{e}"


@dataclass(frozen=True, order=True, slots=True)
class Monomial:
    """w2^b * w3^c. Field order makes the dataclass ordering the lex order with w2 dominant."""

    b: int = 0
    c: int = 0

    def __post_init__(self) -> None:
        _check_exponent("b", self.b)
        _check_exponent("c", self.c)

    @property
    def degree(self) -> int:
        return 2 * self.b + 3 * self.c

    @property
    def order(self) -> MonomialOrder:
        return MonomialOrder.LEX_W2_W3

    def is_one(self) -> bool:
        return self.b == 0 and self.c == 0

    def divides(self, other: Monomial) -> bool:
        return self.b <= other.b and self.c <= other.c

    def __mul__(self, other: Monomial) -> Monomial:
        if not isinstance(other, Monomial):
            return NotImplemented
        return Monomial(self.b + other.b, self.c + other.c)

    def quotient(self, divisor: Monomial) -> Monomial:
        if not divisor.divides(self):
            raise ValueError(f"{divisor} does not divide {self}")
        return Monomial(self.b - divisor.b, self.c - divisor.c)

    def lcm(self, other: Monomial) -> Monomial:
        return Monomial(max(self.b, other.b), max(self.c, other.c))

    def is_coprime(self, other: Monomial) -> bool:
        return min(self.b, other.b) == 0 and min(self.c, other.c) == 0

    def __str__(self) -> str:
        factors = [_power(v, e) for v, e in (("w2", self.b), ("w3", self.c)) if e]
        return "*".join(factors) or "1"


@dataclass(frozen=True, slots=True)
class ExtMonomial:
    """a^r * w2^b * w3^c in the ring where deg(a) = 2^t - 1. Ordered lex with a dominant."""

    r: int
    b: int
    c: int
    t: int

    def __post_init__(self) -> None:
        _check_exponent("r", self.r)
        _check_exponent("b", self.b)
        _check_exponent("c", self.c)
        if self.t < 1:
            raise ValueError(f"tower parameter t must be positive, got {self.t}")

    @classmethod
    def one(cls, t: int) -> ExtMonomial:
        return cls(0, 0, 0, t)

    @classmethod
    def lift(cls, m: Monomial, t: int, r: int = 0) -> ExtMonomial:
        return cls(r, m.b, m.c, t)

    @property
    def degree(self) -> int:
        return self.r * (2**self.t - 1) + 2 * self.b + 3 * self.c

    @property
    def order(self) -> MonomialOrder:
        return MonomialOrder.LEX_A_W2_W3

    @property
    def w_part(self) -> Monomial:
        return Monomial(self.b, self.c)

    def is_one(self) -> bool:
        return self.r == 0 and self.b == 0 and self.c == 0

    def _same_ring(self, other: ExtMonomial) -> None:
        if not isinstance(other, ExtMonomial):
            raise DomainMismatchError(f"cannot combine ExtMonomial with {type(other).__name__}")
        if other.t != self.t:
            raise DomainMismatchError(f"ExtMonomials from different towers: t={self.t} vs t={other.t}")

    def _key(self) -> tuple[int, int, int]:
        return (self.r, self.b, self.c)

    def __lt__(self, other: ExtMonomial) -> bool:
        self._same_ring(other)
        return self._key() < other._key()

    def __le__(self, other: ExtMonomial) -> bool:
        self._same_ring(other)
        return self._key() <= other._key()

    def __gt__(self, other: ExtMonomial) -> bool:
        self._same_ring(other)
        return self._key() > other._key()

    def __ge__(self, other: ExtMonomial) -> bool:
        self._same_ring(other)
        return self._key() >= other._key()

    def divides(self, other: ExtMonomial) -> bool:
        self._same_ring(other)
        return self.r <= other.r and self.b <= other.b and self.c <= other.c

    def __mul__(self, other: ExtMonomial) -> ExtMonomial:
        if not isinstance(other, ExtMonomial):
            return NotImplemented
        self._same_ring(other)
        return ExtMonomial(self.r + other.r, self.b + other.b, self.c + other.c, self.t)

    def quotient(self, divisor: ExtMonomial) -> ExtMonomial:
        if not divisor.divides(self):
            raise ValueError(f"{divisor} does not divide {self}")
        return ExtMonomial(self.r - divisor.r, self.b - divisor.b, self.c - divisor.c, self.t)

    def lcm(self, other: ExtMonomial) -> ExtMonomial:
        self._same_ring(other)
        return ExtMonomial(max(self.r, other.r), max(self.b, other.b), max(self.c, other.c), self.t)

    def is_coprime(self, other: ExtMonomial) -> bool:
        self._same_ring(other)
        return min(self.r, other.r) == 0 and min(self.b, other.b) == 0 and min(self.c, other.c) == 0

    def __str__(self) -> str:
        factors = [_power(v, e) for v, e in (("a", self.r), ("w2", self.b), ("w3", self.c)) if e]
        return "*".join(factors) or "1"


@dataclass(frozen=True, order=True, slots=True)
class WMonomial:
    """w1^{a_1} * ... * wk^{a_k}; only used by the general-k dual-class generator."""

    exps: tuple[int, ...]

    def __post_init__(self) -> None:
        for i, e in enumerate(self.exps, start=1):
            _check_exponent(f"a{i}", e)

    @classmethod
    def one(cls, k: int) -> WMonomial:
        return cls((0,) * k)

    @classmethod
    def generator(cls, i: int, k: int) -> WMonomial:
        exps = [0] * k
        exps[i - 1] = 1
        return cls(tuple(exps))

    @property
    def degree(self) -> int:
        return sum(i * e for i, e in enumerate(self.exps, start=1))

    def is_one(self) -> bool:
        return not any(self.exps)

    def __mul__(self, other: WMonomial) -> WMonomial:
        if not isinstance(other, WMonomial):
            return NotImplemented
        if len(other.exps) != len(self.exps):
            raise DomainMismatchError(f"WMonomials in {len(self.exps)} and {len(other.exps)} variables")
        return WMonomial(tuple(x + y for x, y in zip(self.exps, other.exps)))

    def __str__(self) -> str:
        factors = [_power(f"w{i}", e) for i, e in enumerate(self.exps, start=1) if e]
        return "*".join(factors) or "1"


AnyMonomial = Union[Monomial, ExtMonomial, WMonomial]


def cmp_lex(m1: AnyMonomial, m2: AnyMonomial) -> Cmp:
    """Three-way lexicographic comparison (w2 dominant; a dominant for ExtMonomial)."""
    if type(m1) is not type(m2):
        raise DomainMismatchError(f"cannot compare {type(m1).__name__} with {type(m2).__name__}")
    if m1 == m2:
        return Cmp.EQ
    return Cmp.GT if m1 > m2 else Cmp.LT


def weighted_degree(m: AnyMonomial) -> int:
    return m.degree
