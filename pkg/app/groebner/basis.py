from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Generic, Iterable, Iterator, Optional

from app.algebra.monomial import DomainMismatchError, MonomialOrder
from app.algebra.polynomial import M, Polynomial

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class BasisSet(Generic[M]):
    """Ordered list of nonzero polynomials with their leading monomials cached."""

    polys: tuple[Polynomial[M], ...]
    order: MonomialOrder
    leading: tuple[M, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if any(not p for p in self.polys):
            raise ValueError("BasisSet members must be nonzero; build it with BasisSet.of()")
        lms = tuple(p.leading_monomial for p in self.polys)
        for lm in lms:
            if lm.order is not self.order:
                raise DomainMismatchError(f"{type(lm).__name__} is not ordered by {self.order.value}")
        object.__setattr__(self, "leading", lms)

    @classmethod
    def of(cls, polys: Iterable[Polynomial[M]], order: Optional[MonomialOrder] = None) -> BasisSet[M]:
        """Build a basis, stripping zero polynomials with a warning."""
        polys = list(polys)
        kept = tuple(p for p in polys if p)
        if len(kept) != len(polys):
            logger.warning("Stripped %s zero polynomial(s) from basis input", len(polys) - len(kept))
        if order is None:
            if not kept:
                raise ValueError("cannot infer the monomial order of an empty basis")
            order = kept[0].leading_monomial.order
        return cls(polys=kept, order=order)

    def __len__(self) -> int:
        return len(self.polys)

    def __iter__(self) -> Iterator[Polynomial[M]]:
        return iter(self.polys)

    def __getitem__(self, i: int) -> Polynomial[M]:
        return self.polys[i]

    def as_set(self) -> frozenset[Polynomial[M]]:
        return frozenset(self.polys)

    def sorted_by_lm(self) -> BasisSet[M]:
        return BasisSet(polys=tuple(sorted(self.polys, key=lambda p: p.leading_monomial, reverse=True)), order=self.order)

    def reducedness_violation(self) -> Optional[tuple[int, int, M]]:
        """(i, j, m) with LM(f_i) dividing the monomial m of f_j (i != j), or None if reduced."""
        for i, lm in enumerate(self.leading):
            for j, q in enumerate(self.polys):
                if i == j:
                    continue
                for m in q:
                    if lm.divides(m):
                        return i, j, m
        return None

    def is_reduced(self) -> bool:
        return self.reducedness_violation() is None

    def __str__(self) -> str:
        return "{" + ", ".join(str(p) for p in self.polys) + "}"


@dataclass(frozen=True)
class SPair(Generic[M]):
    i: int
    j: int
    lcm: M

    def __post_init__(self) -> None:
        if not self.i < self.j:
            raise ValueError(f"S-pair indices must satisfy i < j, got ({self.i}, {self.j})")

    @property
    def sort_key(self) -> tuple:
        # ascending lcm weighted degree, ties by lex on the lcm, then by index
        return (self.lcm.degree, self.lcm, self.i, self.j)

    def __lt__(self, other: SPair[M]) -> bool:
        return self.sort_key < other.sort_key
