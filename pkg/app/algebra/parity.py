from __future__ import annotations

from typing import Sequence


class UsageError(ValueError):
    pass


def binom_mod2(n: int, k: int) -> int:
    """Parity of binom(n, k) by Lucas: odd iff the bits of k are a subset of the bits of n."""
    if n < 0 or k < 0:
        raise UsageError(f"binom_mod2 expects nonnegative arguments, got ({n}, {k})")
    if k > n:
        return 0
    return 1 if (k & ~n) == 0 else 0


def multinomial_mod2(parts: Sequence[int]) -> int:
    """
    Parity of [a_1, ..., a_k] = binom(a_1+...+a_k, a_1) * binom(a_2+...+a_k, a_2) * ...

    Evaluated as the chained product of binomials, each reduced by binom_mod2.
    """
    if not parts:
        raise UsageError("multinomial_mod2 needs at least one entry")
    if any(a < 0 for a in parts):
        raise UsageError(f"multinomial_mod2 expects nonnegative entries, got {list(parts)}")

    remaining = sum(parts)
    for a in parts:
        if not binom_mod2(remaining, a):
            return 0
        remaining -= a
    return 1
