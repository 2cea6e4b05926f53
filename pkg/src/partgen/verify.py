"""Cross-verification suite tying the layers together.

Every check pits independently derived results against each other: the
counting recurrences against the pentagonal oracle, the six generators
against each other and against the standalone succession rules, and the
instrumented operation counts against the closed-form totals.

The generator iterators can be overridden per algorithm, which lets the
test suite confirm that a broken generator is actually caught here.
"""

from __future__ import annotations

from collections import Counter
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from . import core, counting
from .analysis import closed_form
from .counting import CountTable
from .generators import (Algorithm, ASCENDING_ALGOS, Hooks, Step,
                         iter_accel_asc, iter_accel_desc, iter_rec_asc,
                         iter_rec_desc, iter_rule_asc, iter_rule_desc)
from .instrument import Mode, Recorder

IterFn = Callable[[int, Optional[Hooks], bool], Iterator[Step]]

CheckResult = Tuple[str, bool, str]  # (name, passed, detail)


def default_iterators() -> Dict[Algorithm, IterFn]:
    return {
        Algorithm.REC_ASC: lambda n, h=None, i=False: iter_rec_asc(n, 1, h, i),
        Algorithm.REC_DESC: iter_rec_desc,
        Algorithm.RULE_ASC: iter_rule_asc,
        Algorithm.RULE_DESC: iter_rule_desc,
        Algorithm.ACCEL_ASC: iter_accel_asc,
        Algorithm.ACCEL_DESC: iter_accel_desc,
    }


def _materialized(it: Iterator[Step]) -> List[Tuple[int, ...]]:
    return [tuple(buf[lo:hi]) for buf, lo, hi in it]


def check_partition_counts(tables: CountTable, max_n: int) -> List[str]:
    failures = []
    oracle = counting.pentagonal_pn(max_n)
    for n in range(1, max_n + 1):
        if tables.p(n) != oracle[n]:
            failures.append(f"p({n}): table {tables.p(n)} != oracle {oracle[n]}")
    return failures


def check_differential(tables: CountTable, max_n: int,
                       iterators: Dict[Algorithm, IterFn]) -> List[str]:
    """All six generators agree on the partition multiset and its size."""
    failures = []
    for n in range(1, max_n + 1):
        reference = None
        for algo, it in iterators.items():
            seqs = _materialized(it(n, None, False))
            normalized = Counter(tuple(sorted(s)) for s in seqs)
            if len(seqs) != tables.p(n):
                failures.append(f"{algo.value} n={n}: {len(seqs)} visits, want p(n)={tables.p(n)}")
                continue
            if reference is None:
                reference = normalized
            elif normalized != reference:
                failures.append(f"{algo.value} n={n}: partition multiset disagrees")
    return failures


def check_order_contracts(max_n: int,
                          iterators: Dict[Algorithm, IterFn]) -> List[str]:
    """Emission order and per-visit validity of every generator."""
    failures = []
    for n in range(1, max_n + 1):
        for algo, it in iterators.items():
            seqs = _materialized(it(n, None, False))
            order = core.Order.ASCENDING if algo in ASCENDING_ALGOS else core.Order.DESCENDING
            increasing = algo is not Algorithm.RULE_DESC and algo is not Algorithm.ACCEL_DESC
            for s in seqs:
                try:
                    core.validate(s, order)
                except Exception as exc:  # noqa: BLE001 - report, don't crash
                    failures.append(f"{algo.value} n={n}: invalid visit {s}: {exc}")
            for a, b in zip(seqs, seqs[1:]):
                ok = a < b if increasing else a > b
                if not ok:
                    failures.append(f"{algo.value} n={n}: order breaks at {a} -> {b}")
                    break
    return failures


def check_succession(max_n: int, iterators: Dict[Algorithm, IterFn]) -> List[str]:
    """Generator steps match the standalone succession rules."""
    failures = []
    rules = {
        Algorithm.RULE_ASC: (core.lexsucc_asc, core.Order.ASCENDING),
        Algorithm.RULE_DESC: (core.lexsucc_desc, core.Order.DESCENDING),
        Algorithm.ACCEL_DESC: (core.lexsucc_desc, core.Order.DESCENDING),
    }
    for n in range(1, max_n + 1):
        for algo, (rule, order) in rules.items():
            seqs = _materialized(iterators[algo](n, None, False))
            for a, b in zip(seqs, seqs[1:]):
                try:
                    succ = rule(core.validate(a, order))
                except Exception as exc:  # noqa: BLE001 - report, don't crash
                    failures.append(f"{algo.value} n={n}: {a}: {exc}")
                    break
                if succ.parts != b:
                    failures.append(
                        f"{algo.value} n={n}: {a} -> {b}, rule says {succ.parts}")
                    break
        # rec-asc visits A(n, m) in lexicographic order, so its first
        # visit must be the closed-form lexicographic minimum.
        for m in range(1, n + 1):
            first = next(iter(iter_rec_asc(n, m)))
            got = tuple(first[0][first[1]:first[2]])
            want = core.lexmin_asc(n, m).parts
            if got != want:
                failures.append(f"lexmin({n},{m}): generator {got} != rule {want}")
    return failures


def check_counters(tables: CountTable, max_n: int,
                   iterators: Dict[Algorithm, IterFn]) -> List[str]:
    """Instrumented totals equal the closed-form values."""
    failures = []
    for n in range(2, max_n + 1):
        for algo, it in iterators.items():
            recorder = Recorder(Mode.COUNTS_ONLY)
            for _ in it(n, recorder, False):
                pass
            got = recorder.counts
            want = closed_form(tables, algo, n)
            for name, expect, actual in [
                ("reads", want.reads, got.reads),
                ("writes", want.writes, got.writes),
                ("invocations", want.invocations, got.invocations),
            ]:
                if expect is not None and expect != actual:
                    failures.append(f"{algo.value} n={n}: {name} {actual} != {expect}")
            failures.extend(_branch_failures(tables, algo, n, got.branch))
    return failures


def _branch_failures(tables: CountTable, algo: Algorithm, n: int,
                     branch: Dict[str, int]) -> List[str]:
    p = tables.p
    expected = {}
    if algo is Algorithm.ACCEL_ASC:
        expected = {
            "accel-asc-visit-v": p(n - 2),
            "accel-asc-visit-o": p(n) - p(n - 2),
        }
    elif algo is Algorithm.ACCEL_DESC and n >= 2:
        expected = {
            "accel-desc-q=q-1": p(n - 2),
            "accel-desc-q=q+1": p(n - 2) - 1,  # both increment sites combined
        }
    elif algo is Algorithm.RULE_DESC:
        expected = {
            "rule-desc-k=k-1": 1 - n + sum(p(x) for x in range(1, n)),
        }
    failures = []
    for label, want in expected.items():
        if label == "accel-desc-q=q+1":
            got = branch.get("accel-desc-q=q+1-e", 0) + branch.get("accel-desc-q=q+1-p", 0)
        else:
            got = branch.get(label, 0)
        if got != want:
            failures.append(f"{algo.value} n={n}: branch {label} {got} != {want}")
    return failures


def check_identities(tables: CountTable, max_n: int) -> List[str]:
    failures = []
    for n in range(1, max_n + 1):
        # terminal/nonterminal split and its recurrence cross-check
        t = counting.terminal_count(tables, n)
        nt = counting.nonterminal_count(tables, n)
        if t + nt != tables.p(n):
            failures.append(f"n={n}: terminal {t} + nonterminal {nt} != p(n)")
        if n >= 3:
            for m in range(1, n // 2 + 1):
                lhs = tables.ntac(n, m)
                rhs = tables.nac(n, m) - (tables.nac(n - 2, m) if m <= n - 2 else 0)
                if lhs != rhs:
                    failures.append(f"ntac({n},{m})={lhs} != nac diff {rhs}")
        if counting.pn_via_largest_parts(n) != tables.p(n):
            failures.append(f"floor-sum formula fails at n={n}")
        # the scan-decrement total is the number of 1s beyond the final
        # all-ones composition, tying ones_total to an instrumented count
        recorder = Recorder(Mode.COUNTS_ONLY)
        for _ in iter_rule_desc(n, recorder):
            pass
        decrements = recorder.counts.branch.get("rule-desc-k=k-1", 0)
        if decrements != counting.ones_total(tables, n) - n:
            failures.append(
                f"n={n}: scan decrements {decrements} != ones_total - n")
    return failures


def run_suite(max_n: int,
              iterators: Optional[Dict[Algorithm, IterFn]] = None,
              counter_cap: int = 50,
              succession_cap: int = 25) -> List[CheckResult]:
    """Run every check up to max_n; returns (name, passed, detail) triples."""
    iterators = iterators if iterators is not None else default_iterators()
    tables = counting.build_tables(max(max_n, 2))
    results = []
    for name, failures in [
        ("partition-counts", check_partition_counts(tables, max_n)),
        ("differential-equivalence", check_differential(tables, max_n, iterators)),
        ("order-contracts", check_order_contracts(max_n, iterators)),
        ("succession-conformance",
         check_succession(min(max_n, succession_cap), iterators)),
        ("counter-closed-forms",
         check_counters(tables, min(max_n, counter_cap), iterators)),
        ("identities", check_identities(tables, max_n)),
    ]:
        detail = "; ".join(failures[:5])
        if len(failures) > 5:
            detail += f" (+{len(failures) - 5} more)"
        results.append((name, not failures, detail))
    return results
