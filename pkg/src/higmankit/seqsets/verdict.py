from __future__ import annotations

import enum


class Verdict(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value

    def __bool__(self):
        raise TypeError("Verdict is three-valued; compare against Verdict.YES explicitly")


YES, NO, UNKNOWN = Verdict.YES, Verdict.NO, Verdict.UNKNOWN


def from_bool(b: bool) -> Verdict:
    return YES if b else NO


def v_and(a: Verdict, b: Verdict) -> Verdict:
    if a is NO or b is NO:
        return NO
    if a is YES and b is YES:
        return YES
    return UNKNOWN


def v_or(a: Verdict, b: Verdict) -> Verdict:
    if a is YES or b is YES:
        return YES
    if a is NO and b is NO:
        return NO
    return UNKNOWN


class Budget:
    """Counts witness-search steps; shared down one membership query."""

    def __init__(self, limit: int):
        if limit < 0:
            raise ValueError("budget must be >= 0")
        self.limit = limit
        self.spent = 0

    @property
    def remaining(self) -> int:
        return self.limit - self.spent

    def take(self) -> bool:
        if self.spent >= self.limit:
            return False
        self.spent += 1
        return True

    def __repr__(self) -> str:
        return f"Budget({self.spent}/{self.limit})"
