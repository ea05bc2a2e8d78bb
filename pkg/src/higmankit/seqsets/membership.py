from __future__ import annotations

import os
from typing import Iterable

from ..codec import canonical
from . import semantics
from .expr import SetExpr
from .verdict import Budget, Verdict

DEFAULT_BUDGET = 10_000


def default_budget() -> int:
    """Budget from ``HIGMANKIT_BUDGET`` if set, else 10000."""
    raw = os.environ.get("HIGMANKIT_BUDGET")
    return int(raw) if raw else DEFAULT_BUDGET


def member(e: SetExpr, t: Iterable[int], budget: int | Budget | None = None) -> Verdict:
    """Three-valued membership; ``budget`` caps witness-search steps (projections only)."""
    if budget is None:
        budget = default_budget()
    b = budget if isinstance(budget, Budget) else Budget(budget)
    return semantics.member(e, canonical(t), b)
