"""Tour of the six partition generators.

Every generator emits each partition of n exactly once, encoded either
as a nondecreasing (ascending) or nonincreasing (descending) sequence
of parts. The three ascending generators and the recursive descending
one run in lexicographic order; the other two run in reverse
lexicographic order.
"""

from partgen import (Algorithm, GeneratorSpec, rec_asc, rec_desc_raw,
                     stream)

N = 6

for algo in Algorithm:
    parts = list(stream(GeneratorSpec(algo, N), materialize=True))
    print(f"{algo.value:>10}: " + "  ".join("+".join(map(str, p)) for p in parts))

print()
print("ascending compositions of 9 whose parts are all >= 3:")
rec_asc(9, 3, lambda buf, lo, hi: print("  ", "+".join(map(str, buf[lo:hi]))))

print()
print("descending compositions of 8 with largest part exactly 4:")
rec_desc_raw(8, 4, lambda buf, lo, hi: print("  ", "+".join(map(str, buf[lo:hi]))))

print()
print("zero-copy streaming keeps one live buffer; copy if you keep views:")
spec = GeneratorSpec(Algorithm.ACCEL_ASC, 5)
kept = [view.to_tuple() for view in stream(spec)]
print("  ", kept)
