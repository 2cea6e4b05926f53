"""Counting the work each generator does, in the read/write cost model.

Only fetches and stores of composition-array elements are charged; loop
arithmetic is free, and initialization is excluded unless you opt in.
Every total below is also available in closed form, and the two always
agree exactly.
"""

from partgen import (Algorithm, GeneratorSpec, Mode, attach, build_tables,
                     closed_form, tape_to_csv)

N = 12
tables = build_tables(N)
print(f"operation counts for one full run at n={N} (p({N}) = {tables.p(N)}):")
print(f"{'algorithm':>11} {'reads':>6} {'writes':>7} {'invocations':>12}")
for algo in Algorithm:
    result = attach(GeneratorSpec(algo, N)).run()
    c = result.counts
    predicted = closed_form(tables, algo, N)
    print(f"{algo.value:>11} {c.reads:>6} {c.writes:>7} {c.invocations:>12}")
    for name, got, want in [("reads", c.reads, predicted.reads),
                            ("writes", c.writes, predicted.writes),
                            ("invocations", c.invocations, predicted.invocations)]:
        if want is not None:
            assert got == want, (algo, name)

print()
print("a full tape records which slot each read/write touches, grouped")
print("by the visit it precedes:")
result = attach(GeneratorSpec(Algorithm.ACCEL_ASC, 5), Mode.FULL_TAPE).run()
print(tape_to_csv(result.tape))

print("branch frequencies show where the accelerated ascending generator")
print("spends its visits (fast path vs merge):")
result = attach(GeneratorSpec(Algorithm.ACCEL_ASC, 12)).run()
for label, count in sorted(result.counts.branch.items()):
    print(f"  {label}: {count}")
