#!/usr/bin/env python3
"""Regularity of contraction maps: existential oracle versus convexity test.

An element a is regular when a = a*b*a for some witness b.  For full
contractions this is equivalent to the kernel owning a convex transversal,
and for the order-compatible families it reduces to a little arithmetic on
the boundary blocks.

Run:  python demos/tour_regularity.py
"""

from contracta import (
    enumerate_family,
    has_convex_transversal,
    is_convex,
    kernel,
    make_map,
    max_convex_refinement,
    partition_to_text,
    regular_char_ct,
    regular_char_orct,
    regular_elements,
    transversals,
)

print("The convexity test, on a map that fails it:")
a = make_map(6, [1, 2, 2, 3, 4, 3])
k = kernel(a)
print(f"  a = {a},  kernel {partition_to_text(k)}")
for t in transversals(k):
    print(f"    transversal {t.points}: convex? {is_convex(t)}")
print(f"  has_convex_transversal: {has_convex_transversal(k)}")
print(f"  regular_char_ct(a): {regular_char_ct(a)}")
print()

print("Even so, the kernel refines to a partition that does collapse convexly:")
print(f"  max_convex_refinement(a) = {partition_to_text(max_convex_refinement(a))}")
print()

print("The characterization agrees with the brute-force oracle on every")
print("contraction of the 5-chain:")
s = enumerate_family("ct", 5)
oracle = set(regular_elements(s))
agree = sum(regular_char_ct(m) == (m in oracle) for m in s.elements)
print(f"  {agree}/{s.size} maps agree;  {len(oracle)} of them are regular")
print()

print("For order-preserving or order-reversing contractions the test is")
print("arithmetic: the boundary blocks must sit at a common offset d from")
print("their images and interior blocks must be singletons at offset d.")
for word in ([1, 1, 2, 3], [2, 2, 2, 3], [3, 3, 2, 1], [1, 2, 2, 3]):
    m = make_map(4, word)
    print(f"  {m}: regular? {regular_char_orct(m)}")
