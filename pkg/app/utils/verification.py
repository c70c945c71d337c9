from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


class VerificationFailure(AssertionError):
    """A closed-form claim did not match what the engine computed."""

    def __init__(self, check: str, t: Optional[int], witness: str):
        where = f" (t={t})" if t is not None else ""
        super().__init__(f"{check}{where}: {witness}")
        self.check = check
        self.t = t
        self.witness = witness


@dataclass(frozen=True)
class CheckReport:
    check: str
    t: Optional[int]
    details: str


def expect(condition: bool, check: str, t: Optional[int], witness: str) -> None:
    if not condition:
        raise VerificationFailure(check, t, witness)
