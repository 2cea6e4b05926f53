"""Closed-form operation totals, average costs, and ratio predictions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .counting import CountTable
from .errors import GuardViolation
from .generators import Algorithm


class Pair(Enum):
    RECURSIVE_ASC_VS_DESC = "recursive"
    ACCEL_ASC_VS_DESC = "accel"


class Basis(Enum):
    INVOCATION_COUNTS = "invocations"
    READ_WRITE_COUNTS = "read-write"
    WALL_CLOCK = "wall-clock"


@dataclass
class RatioReport:
    n: int
    predicted: float
    pair: Pair
    basis: Basis
    measured: Optional[float] = None


@dataclass
class OpPrediction:
    """Exact closed-form totals; None where no closed form applies."""

    reads: Optional[int] = None
    writes: Optional[int] = None
    invocations: Optional[int] = None


# Smallest n each set of closed forms is stated for.  The recursive
# descending invocation count and the accelerated descending read/write
# totals underestimate resp. go negative at n = 1.
_GUARDS = {
    Algorithm.REC_ASC: 1,
    Algorithm.REC_DESC: 2,
    Algorithm.RULE_ASC: 1,
    Algorithm.RULE_DESC: 1,
    Algorithm.ACCEL_ASC: 1,
    Algorithm.ACCEL_DESC: 2,
}


def closed_form(tables: CountTable, algo: Algorithm, n: int) -> OpPrediction:
    """Exact post-initialization operation totals for one full run."""
    if n < _GUARDS[algo]:
        raise GuardViolation(f"{algo.value} closed forms need n >= {_GUARDS[algo]}")
    p = tables.p
    if algo is Algorithm.REC_ASC:
        return OpPrediction(invocations=p(n))
    if algo is Algorithm.REC_DESC:
        return OpPrediction(invocations=p(n) + p(n - 1))
    if algo is Algorithm.RULE_ASC:
        return OpPrediction(reads=2 * p(n), writes=2 * p(n) - 1)
    if algo is Algorithm.RULE_DESC:
        s = tables.p_sum(n)
        return OpPrediction(reads=s - n, writes=s - 1)
    if algo is Algorithm.ACCEL_ASC:
        return OpPrediction(reads=p(n) - p(n - 2), writes=2 * p(n) - 1)
    if algo is Algorithm.ACCEL_DESC:
        return OpPrediction(reads=2 * p(n) - p(n - 2) - 2,
                            writes=p(n) + p(n - 2) - 2)
    raise GuardViolation(f"unknown algorithm {algo!r}")


def predicted_ratio(tables: CountTable, pair: Pair, n: int) -> float:
    """Predicted asc/desc running-time ratio for one algorithm pair."""
    if n <= 1:
        raise GuardViolation("ratio predictions need n > 1")
    p = tables.p
    if pair is Pair.RECURSIVE_ASC_VS_DESC:
        return p(n) / (p(n) + p(n - 1))
    return (3 * p(n) - p(n - 2)) / (3 * p(n))


def avg_cost_table(n: int):
    """Per-partition average read/write cost of the four rule-style algorithms.

    The descending-rule entries use the crude sqrt-growth estimate for
    (sum of p(x), x <= n) / p(n); the accelerated entries use the
    exponential estimate of p(n-2)/p(n).
    """
    if n < 1:
        raise GuardViolation(f"n must be positive, got {n}")
    sum_over_p = 1.0 + math.sqrt(6 * n) / math.pi
    decay = math.exp(-2 * math.pi / math.sqrt(6 * n))
    return [
        ("rule-asc", 2.0, 2.0),
        ("rule-desc", sum_over_p, sum_over_p),
        ("accel-asc", 1.0 - decay, 2.0),
        ("accel-desc", 1.0, 1.0 + decay),
    ]
