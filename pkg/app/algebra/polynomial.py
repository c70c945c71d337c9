from __future__ import annotations

from typing import Generic, Iterable, Iterator, Optional, TypeVar, Union

from app.algebra.monomial import (
    DomainMismatchError,
    ExtMonomial,
    Monomial,
    MonomialOrder,
    WMonomial,
)

M = TypeVar("M", Monomial, ExtMonomial, WMonomial)


class ZeroPolynomialError(ValueError):
    pass


def toggle_term(acc: set, m) -> None:
    if m in acc:
        acc.remove(m)
    else:
        acc.add(m)


class Polynomial(Generic[M]):
    """
    Sparse polynomial over GF(2): a set of monomials, each with implicit coefficient 1.

    Terms are stored in strictly decreasing lex order, so the leading monomial is terms[0].
    Instances are immutable; every operation returns a new polynomial.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Iterable[M] = ()):
        acc: set = set()
        for m in terms:
            toggle_term(acc, m)
        self._terms: tuple[M, ...] = self._sorted(acc)

    # construction helpers

    def _sorted(self, acc: set) -> tuple:
        kinds = {type(m) for m in acc}
        if len(kinds) > 1:
            names = sorted(k.__name__ for k in kinds)
            raise DomainMismatchError(f"polynomial mixes monomial kinds: {names}")
        return tuple(sorted(acc, reverse=True))

    def _new(self, acc: set) -> Polynomial[M]:
        out = object.__new__(type(self))
        out._terms = out._sorted(acc)
        return out

    def like(self, terms: Iterable[M]) -> Polynomial[M]:
        """Polynomial of the same ring (and tower) from distinct terms."""
        return self._new(set(terms))

    @classmethod
    def monomial(cls, m: M) -> Polynomial[M]:
        return cls((m,))

    @classmethod
    def one(cls) -> Polynomial[Monomial]:
        return cls((Monomial(),))

    @classmethod
    def zero(cls) -> Polynomial[Monomial]:
        return cls()

    # container protocol

    @property
    def terms(self) -> tuple[M, ...]:
        return self._terms

    def __iter__(self) -> Iterator[M]:
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __contains__(self, m: object) -> bool:
        return m in self._terms

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Polynomial):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self._terms)

    def __repr__(self) -> str:
        return f"{type(self).__name__}({str(self)!r})"

    def __str__(self) -> str:
        return " + ".join(str(m) for m in self._terms) or "0"

    # ring operations

    def __add__(self, other: Polynomial[M]) -> Polynomial[M]:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._new(set(self._terms).symmetric_difference(other._terms))

    __sub__ = __add__

    def __neg__(self) -> Polynomial[M]:
        return self

    def __mul__(self, other: Union[Polynomial[M], M]) -> Polynomial[M]:
        if isinstance(other, Polynomial):
            acc: set = set()
            for x in self._terms:
                for y in other._terms:
                    toggle_term(acc, x * y)
            return self._new(acc)
        if isinstance(other, (Monomial, ExtMonomial, WMonomial)):
            # distinct monomials stay distinct after multiplying by a fixed monomial
            return self._new({x * other for x in self._terms})
        return NotImplemented

    def __rmul__(self, other: M) -> Polynomial[M]:
        if isinstance(other, (Monomial, ExtMonomial, WMonomial)):
            return self * other
        return NotImplemented

    def square(self) -> Polynomial[M]:
        """Frobenius: (sum m)^2 = sum m^2 in characteristic 2."""
        return self._new({m * m for m in self._terms})

    def __pow__(self, n: int) -> Polynomial[M]:
        if n < 0:
            raise ValueError("negative powers are not defined")
        result: Optional[Polynomial[M]] = None
        base = self
        while n:
            if n & 1:
                result = base if result is None else result * base
            n >>= 1
            if n:
                base = base.square()
        if result is None:
            return self._unit()
        return result

    def _unit(self) -> Polynomial[M]:
        if not self._terms:
            raise ZeroPolynomialError("cannot infer the unit of the zero polynomial's ring")
        m = self._terms[0]
        if isinstance(m, ExtMonomial):
            return self._new({ExtMonomial.one(m.t)})
        if isinstance(m, WMonomial):
            return self._new({WMonomial.one(len(m.exps))})
        return self._new({Monomial()})

    # grading and order

    @property
    def leading_monomial(self) -> M:
        if not self._terms:
            raise ZeroPolynomialError("the zero polynomial has no leading monomial")
        return self._terms[0]

    def degrees(self) -> set[int]:
        return {m.degree for m in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def homogeneous_part(self, degree: int) -> Polynomial[M]:
        return self._new({m for m in self._terms if m.degree == degree})

    def filter(self, keep) -> Polynomial[M]:
        return self._new({m for m in self._terms if keep(m)})


class ExtPolynomial(Polynomial[ExtMonomial]):
    """Polynomial in a, w2, w3 for a fixed tower parameter t."""

    __slots__ = ("t",)

    def __init__(self, terms: Iterable[ExtMonomial] = (), t: Optional[int] = None):
        super().__init__(terms)
        self.t = self._resolve_t(t)

    def _resolve_t(self, t: Optional[int]) -> Optional[int]:
        ts = {m.t for m in self._terms}
        if len(ts) > 1:
            raise DomainMismatchError(f"ExtPolynomial mixes towers {sorted(ts)}")
        inferred = ts.pop() if ts else None
        if t is not None and inferred is not None and t != inferred:
            raise DomainMismatchError(f"terms belong to t={inferred}, not t={t}")
        return t if t is not None else inferred

    def _new(self, acc: set) -> ExtPolynomial:
        out = object.__new__(type(self))
        out._terms = out._sorted(acc)
        out.t = self.t
        return out

    def __add__(self, other: Polynomial) -> ExtPolynomial:
        if isinstance(other, ExtPolynomial) and None not in (self.t, other.t) and self.t != other.t:
            raise DomainMismatchError(f"cannot add polynomials from t={self.t} and t={other.t}")
        out = super().__add__(other)
        if out is NotImplemented:
            return out
        if out.t is None and isinstance(other, ExtPolynomial):
            out.t = other.t
        return out

    __sub__ = __add__

    def __mul__(self, other):
        if isinstance(other, ExtPolynomial) and None not in (self.t, other.t) and self.t != other.t:
            raise DomainMismatchError(f"cannot multiply polynomials from t={self.t} and t={other.t}")
        out = super().__mul__(other)
        if out is not NotImplemented and out.t is None and isinstance(other, ExtPolynomial):
            out.t = other.t
        return out

    @classmethod
    def lift(cls, p: Polynomial[Monomial], t: int, r: int = 0) -> ExtPolynomial:
        """Embed a w2/w3 polynomial as a^r * p in the extended ring."""
        return cls((ExtMonomial.lift(m, t, r) for m in p), t=t)

    @classmethod
    def generator_a(cls, t: int) -> ExtPolynomial:
        return cls((ExtMonomial(1, 0, 0, t),), t=t)

    @classmethod
    def unit(cls, t: int) -> ExtPolynomial:
        return cls((ExtMonomial.one(t),), t=t)

    def _unit(self) -> ExtPolynomial:
        if self.t is None:
            raise ZeroPolynomialError("cannot infer t for the unit of an untagged zero polynomial")
        return self._new({ExtMonomial.one(self.t)})

    def split(self) -> tuple[Polynomial[Monomial], Polynomial[Monomial]]:
        """Write self = p0 + a*p1 (valid when every term has r <= 1)."""
        if any(m.r > 1 for m in self._terms):
            raise ValueError("split() needs a polynomial of a-degree at most 1")
        p0 = Polynomial(m.w_part for m in self._terms if m.r == 0)
        p1 = Polynomial(m.w_part for m in self._terms if m.r == 1)
        return p0, p1


AnyPolynomial = Union[Polynomial[Monomial], ExtPolynomial, Polynomial[WMonomial]]


def add(p: Polynomial[M], q: Polynomial[M]) -> Polynomial[M]:
    return p + q


def mul(p: Polynomial[M], q: Polynomial[M]) -> Polynomial[M]:
    return p * q


def order_of(p: Polynomial) -> Optional[MonomialOrder]:
    if not p:
        return None
    m = p.terms[0]
    return m.order if hasattr(m, "order") else None


def leading_monomial(p: Polynomial[M], order: MonomialOrder) -> M:
    """LM(p) under `order`; with GF(2) coefficients LT(p) = LM(p) and LC(p) = 1."""
    lm = p.leading_monomial
    if lm.order is not order:
        raise DomainMismatchError(f"{type(lm).__name__} terms are not ordered by {order.value}")
    return lm
