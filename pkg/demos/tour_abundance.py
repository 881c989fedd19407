#!/usr/bin/env python3
"""Starred relations and abundance.

The starred relations compare cancellation behaviour instead of ideals: two
elements are L*-related when right-multiplying them fuses exactly the same
pairs.  On the contraction families this reduces to image equality (L*),
kernel equality (R*), both (H*), or equal heights (D*).  A semigroup is left
abundant when every L*-class contains an idempotent; the contraction
families are left abundant at every size, but right abundance breaks at
chain size 4.

Run:  python demos/tour_abundance.py
"""

from contracta import (
    abundance_witness,
    enumerate_family,
    image,
    is_idempotent,
    is_left_abundant,
    is_right_abundant,
    kernel,
    map_to_text,
    partition_to_text,
    starred_char,
    starred_partition,
)

s3 = enumerate_family("ct", 3)
print("Starred class counts on the 3-chain:")
for kind in ("lstar", "rstar", "hstar", "dstar"):
    print(f"  {kind}: {starred_partition(s3, kind).class_count} classes")
print()

a, b = s3.elements[0], s3.elements[1]
print(f"Characterized check for {a} and {b}:")
print(f"  images {image(a)} vs {image(b)} -> lstar: {starred_char(a, b, 'lstar')}")
print(f"  heights equal -> dstar: {starred_char(a, b, 'dstar')}")
print()

print("Abundance across sizes (left / right):")
for n in (2, 3, 4, 5):
    s = enumerate_family("ct", n)
    print(f"  n={n}:  left={is_left_abundant(s)}  right={is_right_abundant(s)}")
print()

print("The 4-chain witness: one whole R*-class without a single idempotent.")
witness = abundance_witness(enumerate_family("ct", 4), "right")
print(f"  shared kernel: {partition_to_text(kernel(witness[0]))}")
for m in witness:
    print(f"  {map_to_text(m)}   idempotent? {is_idempotent(m)}")
