#!/usr/bin/env python3
"""Green's relations on full contractions: ideal oracles and fast paths.

The R relation is kernel equality.  The L relation is subtler: two maps can
be L-related even though neither kernel owns a convex transversal, because
the witnessing collapse may live on a common *refinement* of the kernels.
The characterized predicates search those refinements; the oracles compute
principal ideals.  This tour shows both and checks them against each other.

Run:  python demos/tour_green_relations.py
"""

from contracta import (
    compose,
    d_char,
    enumerate_family,
    green_oracle,
    kernel,
    l_char,
    make_map,
    map_to_text,
    max_convex_refinement,
    partition_to_text,
    r_char,
)

a = make_map(6, [1, 2, 2, 3, 4, 3])
b = make_map(6, [4, 3, 2, 2, 1, 2])
d = make_map(6, [5, 4, 3, 2, 1, 2])

print("The motivating pair on the 6-chain:")
print(f"  a = {a},  b = {b}")
print(f"  kernels differ, so r_char(a, b) = {r_char(a, b)}")
print(f"  both kernels refine to {partition_to_text(max_convex_refinement(a))}")
print(f"  l_char(a, b) = {l_char(a, b)}   witness d = {d}: d*b = {map_to_text(compose(d, b))}, d*a = {map_to_text(compose(d, a))}")
print(f"  d_char(a, b) = {d_char(a, b)}")
print()

print("Class counts on the 4-chain, straight from the ideal oracle:")
s = enumerate_family("ct", 4)
for kind in ("l", "r", "h", "d", "j"):
    part = green_oracle(s, kind)
    print(f"  {kind}: {part.class_count} classes")
print()

print("Characterized L and R agree with the oracles on every pair:")
l_part = green_oracle(s, "l")
r_part = green_oracle(s, "r")
mismatches = 0
for i in range(s.size):
    for j in range(i, s.size):
        x, y = s.elements[i], s.elements[j]
        if l_char(x, y) != l_part.same_class(i, j):
            mismatches += 1
        if r_char(x, y) != r_part.same_class(i, j):
            mismatches += 1
print(f"  mismatches on the 4-chain: {mismatches}")
print()

print("One D-class, displayed as its maps grouped by kernel (rows are")
print("R-classes, columns are L-classes):")
d_part = green_oracle(s, "d")
cls = next(c for c in d_part.classes if s.index_of(make_map(4, [1, 1, 2, 3])) in c)
rows: dict = {}
for i in sorted(cls):
    m = s.elements[i]
    rows.setdefault(partition_to_text(kernel(m)), []).append(map_to_text(m))
for kernel_text, maps in rows.items():
    print(f"  {kernel_text}: {', '.join(maps)}")
