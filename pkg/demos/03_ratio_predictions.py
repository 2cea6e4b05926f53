"""Predicting how much faster the ascending encodings are.

The recursive pair's cost ratio is p(n) / (p(n) + p(n-1)); the
accelerated pair's is (3p(n) - p(n-2)) / (3p(n)). Both stay strictly
below 1 and creep upward slowly, so the ascending generators keep a
roughly constant-factor lead at any practical n. Run the `partgen
bench` subcommand to compare these predictions to wall-clock ratios.
"""

from partgen import Pair, avg_cost_table, build_tables, predicted_ratio

tables = build_tables(200)

print("predicted ascending/descending cost ratios:")
print(f"{'n':>5} {'recursive':>10} {'accelerated':>12}")
for n in (20, 50, 61, 90, 100, 135, 200):
    rec = predicted_ratio(tables, Pair.RECURSIVE_ASC_VS_DESC, n)
    acc = predicted_ratio(tables, Pair.ACCEL_ASC_VS_DESC, n)
    print(f"{n:>5} {rec:>10.4f} {acc:>12.4f}")

print()
print("average reads/writes per partition generated, n = 1000:")
for name, reads, writes in avg_cost_table(1000):
    print(f"  {name:>10}: {reads:.2f} reads, {writes:.2f} writes")

print()
print("the descending succession rule pays for its all-ones tail: its")
print("per-partition cost grows like sqrt(n) while every other")
print("generator stays O(1) amortized.")
