"""Exact enumeration: partition numbers and the counting recurrences.

Four triangular tables are built bottom-up with exact integer arithmetic:

* ``p(n)``        -- partition numbers, p(n) = nac(n, 1)
* ``nac(n, m)``   -- ascending compositions of n with first part >= m
* ``ndcf(n, m)``  -- descending compositions of n with first part exactly m
* ``ntac(n, m)``  -- terminal ascending compositions of n, first part >= m

An independent pentagonal-number recurrence is included as a
cross-check oracle for p(n).
"""

from __future__ import annotations

import math
from enum import Enum
from typing import List

from . import core
from .errors import CapacityError, DomainError, NotTabulated

#: Hard cap on table size; the triangular tables are O(max_n^2) entries.
MAX_CAPACITY = 5000


class CountTable:
    """Immutable-after-construction tables of exact partition counts.

    p(0) = 1 and p(x) = 0 for x < 0 by convention.  Use
    :func:`build_tables` to construct.
    """

    def __init__(self, max_n: int):
        if max_n < 1:
            raise DomainError(f"max_n must be positive, got {max_n}")
        if max_n > MAX_CAPACITY:
            raise CapacityError(f"max_n={max_n} exceeds capacity {MAX_CAPACITY}")
        self.max_n = max_n
        # Triangular tables indexed [n][m], valid for 1 <= m <= n.
        self._nac: List[List[int]] = [[0] * (max_n + 1) for _ in range(max_n + 1)]
        self._ntac: List[List[int]] = [[0] * (max_n + 1) for _ in range(max_n + 1)]
        self._ndcf: List[List[int]] = [[0] * (max_n + 1) for _ in range(max_n + 1)]
        for n in range(1, max_n + 1):
            nac_n = self._nac[n]
            ntac_n = self._ntac[n]
            for m in range(n, 0, -1):
                # nac(n, m) = 1 + sum_{x=m}^{floor(n/2)} nac(n - x, x)
                total = 1
                for x in range(m, n // 2 + 1):
                    total += self._nac[n - x][x]
                nac_n[m] = total
                # ntac(n, m) = 1 + sum_{x=m}^{floor(n/3)} ntac(n - x, x)
                total = 1
                for x in range(m, n // 3 + 1):
                    total += self._ntac[n - x][x]
                ntac_n[m] = total
            ndcf_n = self._ndcf[n]
            ndcf_n[n] = ndcf_n[1] = 1
            for m in range(2, n):
                # ndcf(n, m) = sum_{x=1}^{min(m, n-m)} ndcf(n - m, x)
                ndcf_n[m] = sum(self._ndcf[n - m][x] for x in range(1, min(m, n - m) + 1))
        self._p = [0] * (max_n + 1)
        self._p[0] = 1
        for n in range(1, max_n + 1):
            self._p[n] = self._nac[n][1]

    def _check(self, n: int) -> None:
        if n > self.max_n:
            raise NotTabulated(f"n={n} beyond table capacity {self.max_n}")

    def p(self, n: int) -> int:
        """p(n), with p(0) = 1 and p(x) = 0 for x < 0."""
        if n < 0:
            return 0
        self._check(n)
        return self._p[n]

    def nac(self, n: int, m: int) -> int:
        self._check(n)
        if not 1 <= m <= n:
            raise DomainError(f"need 1 <= m <= n, got m={m}, n={n}")
        return self._nac[n][m]

    def ndcf(self, n: int, m: int) -> int:
        self._check(n)
        if not 1 <= m <= n:
            raise DomainError(f"need 1 <= m <= n, got m={m}, n={n}")
        return self._ndcf[n][m]

    def ntac(self, n: int, m: int) -> int:
        self._check(n)
        if not 1 <= m <= n:
            raise DomainError(f"need 1 <= m <= n, got m={m}, n={n}")
        return self._ntac[n][m]

    def p_sum(self, n: int) -> int:
        """Sum of p(x) for 1 <= x <= n."""
        self._check(n)
        return sum(self._p[1 : n + 1])


def build_tables(max_n: int) -> CountTable:
    """Fill all four tables for 1 <= m <= n <= max_n."""
    return CountTable(max_n)


def pentagonal_pn(max_n: int) -> List[int]:
    """p(0..max_n) via the pentagonal-number recurrence.

    Independent of the composition-counting recurrences; used only as a
    cross-check oracle.
    """
    p = [0] * (max_n + 1)
    p[0] = 1
    for n in range(1, max_n + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            g2 = k * (3 * k + 1) // 2
            if g1 > n and g2 > n:
                break
            sign = 1 if k % 2 == 1 else -1
            if g1 <= n:
                total += sign * p[n - g1]
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


def terminal_count(tables: CountTable, n: int) -> int:
    """Number of terminal ascending compositions of n: p(n) - p(n-2).

    Also asserts agreement with ntac(n, 1) from the recurrence table.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    value = tables.p(n) - tables.p(n - 2)
    assert value == tables.ntac(n, 1), (n, value, tables.ntac(n, 1))
    return value


def nonterminal_count(tables: CountTable, n: int) -> int:
    """Number of nonterminal ascending compositions of n: p(n-2)."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    return tables.p(n - 2)


def ones_total(tables: CountTable, n: int) -> int:
    """Total number of parts equal to 1 across all partitions of n."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if n - 1 > tables.max_n:
        raise NotTabulated(f"need p up to {n - 1}, table holds {tables.max_n}")
    return 1 + sum(tables.p(x) for x in range(1, n))


def pn_via_largest_parts(n: int) -> int:
    """p(n) from the floor-sum over last part pairs of A(n) \\ {<n>}.

    Enumerates ascending compositions via the standalone succession rule
    and evaluates (1 + n + sum floor((a_{k-1}+a_k)/(a_{k-1}+1))) / 2.
    """
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    total = 0
    c = core.lexmin_asc(n, 1)
    while c.k > 1:
        total += (c.parts[-2] + c.parts[-1]) // (c.parts[-2] + 1)
        c = core.lexsucc_asc(c)
    result, rem = divmod(1 + n + total, 2)
    assert rem == 0, "floor-sum parity broken"
    return result


class ApproxKind(Enum):
    SUM_OVER_P = "sum-over-p"  # (sum_{x<=n} p(x)) / p(n)
    PN_MINUS_2_OVER_PN = "pn-2-over-pn"
    PN_MINUS_1_OVER_PN = "pn-1-over-pn"


def approx_ratio(kind: ApproxKind, n: int) -> float:
    """Asymptotic approximations used in the average-cost comparisons."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    if kind is ApproxKind.SUM_OVER_P:
        return 1.0 + math.sqrt(6 * n) / math.pi
    if kind is ApproxKind.PN_MINUS_2_OVER_PN:
        return math.exp(-2 * math.pi / math.sqrt(6 * n))
    if kind is ApproxKind.PN_MINUS_1_OVER_PN:
        return math.exp(-math.pi / math.sqrt(6 * n))
    raise DomainError(f"unknown kind {kind!r}")
