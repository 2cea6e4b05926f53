"""Wall-clock benchmark harness for the algorithm pairs.

The instrumented generators carry Python-level overhead that would
swamp the read/write cost differences the predictions are about, so the
harness times dedicated kernels: the same six algorithms, written flat
and compiled with numba when it is available (plain Python otherwise).
Each kernel feeds a sink so the generation work cannot be optimized
away: a visit counter by default, or an XOR accumulator over all parts.

The reported statistic is the minimum over the configured repetitions.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Tuple

import numpy as np

from .analysis import Basis, Pair, RatioReport, predicted_ratio
from .counting import CountTable
from .errors import DomainError
from .generators import Algorithm

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is normally installed
    HAVE_NUMBA = False

    def njit(**_kwargs):
        def deco(fn):
            return fn

        return deco


class Sink(Enum):
    COUNT_ONLY = "count"
    CHECKSUM_PARTS = "checksum"


@dataclass
class BenchConfig:
    algos: List[Algorithm]
    n_values: List[int]
    repetitions: int = 5
    warmup: int = 1
    sink: Sink = Sink.COUNT_ONLY

    def __post_init__(self):
        if self.repetitions < 1:
            raise DomainError("repetitions must be >= 1")
        if self.warmup < 0:
            raise DomainError("warmup must be >= 0")


# Buffers are 1-based like everywhere else; acc = [visits, checksum].


@njit(cache=True)
def _rec_asc_k(n, m, k, a, acc, checksum):
    x = m
    while 2 * x <= n:
        a[k] = x
        _rec_asc_k(n - x, x, k + 1, a, acc, checksum)
        x += 1
    a[k] = n
    acc[0] += 1
    if checksum:
        s = acc[1]
        for j in range(1, k + 1):
            s ^= a[j]
        acc[1] = s


@njit(cache=True)
def _rec_desc_k(n, m, k, a, acc, checksum, lo):
    a[k] = m
    if n == m or m == 1:
        acc[0] += 1
        if checksum:
            s = acc[1]
            for j in range(lo, k + n - m + 1):
                s ^= a[j]
            acc[1] = s
        if m != 1:
            a[k] = 1
    else:
        top = min(m, n - m)
        for x in range(1, top + 1):
            _rec_desc_k(n - m, x, k + 1, a, acc, checksum, lo)
        a[k] = 1


@njit(cache=True)
def _rule_asc_k(n, a, acc, checksum):
    k = 2
    a[1] = 0
    a[2] = n
    while k != 1:
        y = a[k] - 1
        k -= 1
        x = a[k] + 1
        while x <= y:
            a[k] = x
            y -= x
            k += 1
        a[k] = x + y
        acc[0] += 1
        if checksum:
            s = acc[1]
            for j in range(1, k + 1):
                s ^= a[j]
            acc[1] = s


@njit(cache=True)
def _rule_desc_k(n, a, acc, checksum):
    a[1] = n
    k = 1
    acc[0] += 1
    if checksum:
        acc[1] ^= a[1]
    while k != n:
        length = k
        m = a[k]
        while m == 1:
            k -= 1
            m = a[k]
        rest = m + length - k
        m -= 1
        while m < rest:
            a[k] = m
            rest -= m
            k += 1
        a[k] = rest
        acc[0] += 1
        if checksum:
            s = acc[1]
            for j in range(1, k + 1):
                s ^= a[j]
            acc[1] = s


@njit(cache=True)
def _accel_asc_k(n, a, acc, checksum):
    k = 2
    a[1] = 0
    y = n - 1
    while k != 1:
        k -= 1
        x = a[k] + 1
        while 2 * x <= y:
            a[k] = x
            y -= x
            k += 1
        last = k + 1
        while x <= y:
            a[k] = x
            a[last] = y
            acc[0] += 1
            if checksum:
                s = acc[1]
                for j in range(1, last + 1):
                    s ^= a[j]
                acc[1] = s
            x += 1
            y -= 1
        y += x - 1
        a[k] = y + 1
        acc[0] += 1
        if checksum:
            s = acc[1]
            for j in range(1, k + 1):
                s ^= a[j]
            acc[1] = s


@njit(cache=True)
def _accel_desc_k(n, a, acc, checksum):
    k = 1
    q = 1
    for j in range(2, n + 1):
        a[j] = 1
    a[1] = n
    acc[0] += 1
    if checksum:
        acc[1] ^= a[1]
    if n == 1:
        return
    while q != 0:
        if a[q] == 2:
            k += 1
            a[q] = 1
            q -= 1
        else:
            m = a[q] - 1
            rest = k - q + 1
            a[q] = m
            while rest >= m:
                q += 1
                a[q] = m
                rest -= m
            if rest == 0:
                k = q
            else:
                k = q + 1
                if rest > 1:
                    q += 1
                    a[q] = rest
        acc[0] += 1
        if checksum:
            s = acc[1]
            for j in range(1, k + 1):
                s ^= a[j]
            acc[1] = s


def run_kernel(algo: Algorithm, n: int, sink: Sink = Sink.COUNT_ONLY) -> Tuple[int, int]:
    """One full generation run; returns (visit count, checksum)."""
    if n < 1:
        raise DomainError(f"n must be positive, got {n}")
    a = np.zeros(2 * n + 3, dtype=np.int64)
    acc = np.zeros(2, dtype=np.int64)
    checksum = sink is Sink.CHECKSUM_PARTS
    if algo is Algorithm.REC_ASC:
        _rec_asc_k(n, 1, 1, a, acc, checksum)
    elif algo is Algorithm.REC_DESC:
        a[:] = 1
        _rec_desc_k(2 * n, n, 1, a, acc, checksum, 2)
    elif algo is Algorithm.RULE_ASC:
        _rule_asc_k(n, a, acc, checksum)
    elif algo is Algorithm.RULE_DESC:
        _rule_desc_k(n, a, acc, checksum)
    elif algo is Algorithm.ACCEL_ASC:
        _accel_asc_k(n, a, acc, checksum)
    elif algo is Algorithm.ACCEL_DESC:
        _accel_desc_k(n, a, acc, checksum)
    else:
        raise DomainError(f"unknown algorithm {algo!r}")
    return int(acc[0]), int(acc[1])


def time_algorithm(algo: Algorithm, n: int, repetitions: int = 5,
                   warmup: int = 1, sink: Sink = Sink.COUNT_ONLY) -> float:
    """Minimum wall time over ``repetitions`` full generation runs."""
    for _ in range(warmup):
        run_kernel(algo, n, sink)
    best = float("inf")
    for _ in range(repetitions):
        start = time.perf_counter()
        run_kernel(algo, n, sink)
        best = min(best, time.perf_counter() - start)
    return best


_PAIRS = {
    Pair.RECURSIVE_ASC_VS_DESC: (Algorithm.REC_ASC, Algorithm.REC_DESC),
    Pair.ACCEL_ASC_VS_DESC: (Algorithm.ACCEL_ASC, Algorithm.ACCEL_DESC),
}


def bench_pair(tables: CountTable, pair: Pair, n: int, repetitions: int = 5,
               warmup: int = 1, sink: Sink = Sink.COUNT_ONLY) -> RatioReport:
    """Measured vs predicted asc/desc time ratio for one pair at one n.

    The two contenders run strictly sequentially, ascending first.
    """
    asc, desc = _PAIRS[pair]
    t_asc = time_algorithm(asc, n, repetitions, warmup, sink)
    t_desc = time_algorithm(desc, n, repetitions, warmup, sink)
    return RatioReport(n=n, predicted=predicted_ratio(tables, pair, n),
                       measured=t_asc / t_desc, pair=pair, basis=Basis.WALL_CLOCK)


def run_benchmark(config: BenchConfig) -> List[Tuple[Algorithm, int, float]]:
    """Minimum-of-repetitions timing for every (algo, n) in the config."""
    rows = []
    for algo in config.algos:
        for n in config.n_values:
            rows.append((algo, n, time_algorithm(
                algo, n, config.repetitions, config.warmup, config.sink)))
    return rows
