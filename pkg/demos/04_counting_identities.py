"""Counting partitions four independent ways.

The recurrence tables, the pentagonal-number recurrence, plain
enumeration, and a floor-sum over the last two parts of each ascending
composition all agree on p(n).
"""

from partgen import (ApproxKind, approx_ratio, build_tables,
                     nonterminal_count, ones_total, pentagonal_pn,
                     pn_via_largest_parts, terminal_count)

tables = build_tables(60)
oracle = pentagonal_pn(60)

print("p(n) three ways (table, pentagonal recurrence, floor-sum):")
for n in (12, 30, 45, 60):
    a, b, c = tables.p(n), oracle[n], pn_via_largest_parts(n)
    assert a == b == c
    print(f"  p({n}) = {a}")

print()
print("terminal / nonterminal split: a terminal ascending composition")
print("is one whose successor shortens the tail; there are exactly")
print("p(n) - p(n-2) of them, leaving p(n-2) nonterminals:")
for n in (10, 25, 50):
    t, nt = terminal_count(tables, n), nonterminal_count(tables, n)
    print(f"  n={n}: {t} terminal + {nt} nonterminal = {tables.p(n)}")

print()
print("total number of 1-parts over all partitions of n:")
for n in (5, 12, 25):
    print(f"  n={n}: {ones_total(tables, n)}")

print()
print("how sharp are the asymptotic estimates at desk scale?")
for n in (60,):
    exact = tables.p(n - 2) / tables.p(n)
    est = approx_ratio(ApproxKind.PN_MINUS_2_OVER_PN, n)
    print(f"  p({n-2})/p({n}) = {exact:.4f}, estimate {est:.4f}")
    exact = tables.p_sum(n) / tables.p(n)
    est = approx_ratio(ApproxKind.SUM_OVER_P, n)
    print(f"  sum p(x)/p({n}) = {exact:.4f}, crude estimate {est:.4f}")
