from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Iterator, Optional

from app.algebra.monomial import ExtMonomial, Monomial
from app.algebra.polynomial import ExtPolynomial, Polynomial
from app.config import get_engine_config
from app.groebner.engine import reduce
from app.grassmann.generators import extended_gb
from app.grassmann.tower import TowerConfig

logger = logging.getLogger(__name__)


class BasisBudgetExceeded(RuntimeError):
    pass


def in_basis(m: ExtMonomial) -> bool:
    """Membership in the additive basis: r < 2 and, for every i, b < 2^{t-1} - 2^i or c < 2^i - 1."""
    if m.r >= 2:
        return False
    half = 2 ** (m.t - 1)
    return all(m.b < half - 2**i or m.c < 2**i - 1 for i in range(m.t))


def b_bound(t: int, c: int) -> int:
    """Number of admissible w2-exponents b (they are 0..bound-1) next to w3^c; 0 if none."""
    half = 2 ** (t - 1)
    if c >= half - 1:
        return 0
    # the binding constraint comes from the largest i with 2^i - 1 <= c
    i = (c + 1).bit_length() - 1
    return half - 2**i


def im_part_columns(t: int) -> Iterator[tuple[int, int]]:
    """(c, bound) for every w3-exponent that admits at least one basis monomial."""
    for c in range(2 ** (t - 1) - 1):
        yield c, b_bound(t, c)


def basis_count(t: int) -> int:
    return 2 * sum(bound for _, bound in im_part_columns(t))


@dataclass(frozen=True)
class AdditiveBasis:
    t: int
    degrees: dict[int, tuple[ExtMonomial, ...]]

    def in_degree(self, j: int) -> tuple[ExtMonomial, ...]:
        return self.degrees.get(j, ())

    def __iter__(self) -> Iterator[ExtMonomial]:
        for j in sorted(self.degrees):
            yield from self.degrees[j]

    def __len__(self) -> int:
        return sum(len(ms) for ms in self.degrees.values())

    def __contains__(self, m: object) -> bool:
        return isinstance(m, ExtMonomial) and m in self.degrees.get(m.degree, ())


def additive_basis(cfg: TowerConfig, *, budget: Optional[int] = None) -> AdditiveBasis:
    limit = budget if budget is not None else get_engine_config().basis_budget
    total = basis_count(cfg.t)
    if total > limit:
        raise BasisBudgetExceeded(
            f"additive basis for t={cfg.t} has {total} elements, over the budget of {limit} (set BASIS_BUDGET)"
        )
    buckets: dict[int, list[ExtMonomial]] = {}
    for r in (0, 1):
        for c, bound in im_part_columns(cfg.t):
            for b in range(bound):
                m = ExtMonomial(r, b, c, cfg.t)
                buckets.setdefault(m.degree, []).append(m)
    degrees = {j: tuple(sorted(ms, reverse=True)) for j, ms in sorted(buckets.items())}
    logger.debug("Enumerated additive basis: t=%s size=%s degrees=%s", cfg.t, total, len(degrees))
    return AdditiveBasis(t=cfg.t, degrees=degrees)


def basis_in_degree(cfg: TowerConfig, j: int) -> list[ExtMonomial]:
    """The basis monomials of one degree without materializing the others."""
    out = []
    for r in (0, 1):
        rest = j - r * cfg.deg_a
        if rest < 0:
            continue
        for c in range(rest // 3 + 1):
            if (rest - 3 * c) % 2:
                continue
            b = (rest - 3 * c) // 2
            if b < b_bound(cfg.t, c):
                out.append(ExtMonomial(r, b, c, cfg.t))
    out.sort(reverse=True)
    return out


def _im_betti(t: int, top: int) -> list[int]:
    # difference array with stride 2: column c contributes 1 at 3c, 3c+2, ..., 3c+2(bound-1)
    diff = [0] * (top + 3)
    for c, bound in im_part_columns(t):
        start = 3 * c
        diff[start] += 1
        stop = start + 2 * bound
        if stop <= top + 2:
            diff[stop] -= 1
    dims = [0] * (top + 1)
    for j in range(top + 1):
        dims[j] = diff[j] + (dims[j - 2] if j >= 2 else 0)
    return dims


def im_betti(cfg: TowerConfig) -> list[int]:
    """Dimensions of the w2/w3 subalgebra in degrees 0..2^{t+1}-8."""
    return _im_betti(cfg.t, max(cfg.imp_top_degree, 0))


@dataclass(frozen=True)
class BettiTable:
    t: int
    dims: tuple[int, ...]

    @property
    def n(self) -> int:
        return 2**self.t

    @property
    def dim_manifold(self) -> int:
        return 3 * self.n - 9

    @property
    def total(self) -> int:
        return sum(self.dims)

    def __getitem__(self, j: int) -> int:
        if 0 <= j < len(self.dims):
            return self.dims[j]
        return 0

    def asymmetric_degrees(self) -> list[int]:
        top = self.dim_manifold
        return [j for j in range(top + 1) if self.dims[j] != self.dims[top - j]]

    def is_symmetric(self) -> bool:
        return not self.asymmetric_degrees()


def betti_table(cfg: TowerConfig) -> BettiTable:
    """Counts come from the b-intervals of the basis, so large t never materializes monomials."""
    imp = im_betti(cfg)
    top = cfg.dim_manifold
    dims = [0] * (top + 1)
    for j, d in enumerate(imp):
        if d:
            dims[j] += d
            if j + cfg.deg_a <= top:
                dims[j + cfg.deg_a] += d
    return BettiTable(t=cfg.t, dims=tuple(dims))


def normal_form(cfg: TowerConfig, x: ExtPolynomial) -> ExtPolynomial:
    if x.t is not None and x.t != cfg.t:
        raise ValueError(f"polynomial belongs to t={x.t}, not t={cfg.t}")
    return reduce(x, extended_gb(cfg))


@dataclass(frozen=True)
class CohClass:
    """An element of the cohomology ring, held as its normal form modulo the extended basis."""

    t: int
    value: ExtPolynomial

    @property
    def cfg(self) -> TowerConfig:
        return TowerConfig(t=self.t)

    @classmethod
    def of(cls, cfg: TowerConfig, x: ExtPolynomial) -> CohClass:
        return cls(t=cfg.t, value=normal_form(cfg, x))

    @classmethod
    def from_w(cls, cfg: TowerConfig, p: Polynomial[Monomial]) -> CohClass:
        return cls.of(cfg, ExtPolynomial.lift(p, cfg.t))

    @classmethod
    def unit(cls, cfg: TowerConfig) -> CohClass:
        return cls(t=cfg.t, value=ExtPolynomial.unit(cfg.t))

    @classmethod
    def zero(cls, cfg: TowerConfig) -> CohClass:
        return cls(t=cfg.t, value=ExtPolynomial(t=cfg.t))

    def _same_tower(self, other: CohClass) -> None:
        if not isinstance(other, CohClass) or other.t != self.t:
            raise ValueError("cohomology classes from different towers cannot be combined")

    def __add__(self, other: CohClass) -> CohClass:
        self._same_tower(other)
        # sums of normal forms stay in normal form
        return CohClass(t=self.t, value=self.value + other.value)

    def __mul__(self, other: CohClass) -> CohClass:
        self._same_tower(other)
        return CohClass.of(self.cfg, self.value * other.value)

    def power(self, k: int) -> CohClass:
        if k < 0:
            raise ValueError("negative powers are not defined")
        result = CohClass.unit(self.cfg)
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def is_zero(self) -> bool:
        return not self.value

    def height(self) -> int:
        """Largest m with x^m != 0; the class must have positive degree."""
        if self.is_zero():
            raise ValueError("the zero class has no height")
        if 0 in self.value.degrees():
            raise ValueError("height is only defined for classes of positive degree")
        m, current = 1, self
        while True:
            nxt = current * self
            if nxt.is_zero():
                return m
            m, current = m + 1, nxt

    def split(self) -> tuple[Polynomial[Monomial], Polynomial[Monomial]]:
        return self.value.split()

    def __str__(self) -> str:
        return str(self.value)


def normal_form_coh(cfg: TowerConfig, x: ExtPolynomial) -> CohClass:
    return CohClass.of(cfg, x)
