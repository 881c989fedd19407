#!/usr/bin/env python3
"""A first walk through chain maps, composition, and kernel partitions.

Run:  python demos/tour_maps_and_kernels.py
"""

from contracta import (
    compose,
    fix_points,
    height,
    image,
    is_contraction,
    is_idempotent,
    is_order_preserving,
    kernel,
    make_map,
    partition_to_text,
    transversals,
)

print("A map on the chain {1,...,6} is stored as its image word.")
a = make_map(6, [1, 2, 2, 3, 4, 3])
print(f"  a = {a}")
print(f"  a(5) = {a(5)},  image = {image(a)},  height = {height(a)}")
print(f"  contraction? {is_contraction(a)}   order-preserving? {is_order_preserving(a)}")
print()

print("Maps compose left to right: (a then b)(x) = b(a(x)).")
b = make_map(6, [4, 3, 2, 2, 1, 2])
d = make_map(6, [5, 4, 3, 2, 1, 2])
print(f"  b = {b},  d = {d}")
print(f"  d then b = {compose(d, b)}  (recovers a)")
print(f"  d then a = {compose(d, a)}  (recovers b)")
print()

print("The kernel groups points with the same image; blocks are ordered")
print("by their minimum and paired with their image point.")
k = kernel(a)
print(f"  kernel(a) = {partition_to_text(k)}  with images {k.block_images}")
print()

print("A transversal picks one point per block:")
for t in transversals(k):
    print(f"  {t.points}")
print()

print("Idempotents are the maps that fix their whole image:")
e = make_map(4, [3, 2, 3, 2])
print(f"  e = {e}: idempotent? {is_idempotent(e)}; image {image(e)} = fixed points {fix_points(e)}")
