"""
Partitions and rim hooks
========================

Partitions are plain tuples in reverse lexicographic order.  A rim hook is
a connected skew shape with no 2x2 block; its height is its number of rows.
"""
from hookzeta.partition import (
    SkewShape,
    addable_rim_hooks,
    conjugate,
    format_partition,
    is_rim_hook,
    partitions_of,
    render,
    z,
)

# all partitions of 5, with the centralizer size z(lambda) of each cycle type
for lam in partitions_of(5):
    print(f"{format_partition(lam):12} conjugate {format_partition(conjugate(lam)):12} z = {z(lam)}")

# the skew shape (4,3,1)/(2) is a rim hook of height 3
shape = SkewShape((4, 3, 1), (2,))
print("\n(4,3,1)/(2) is a rim hook:", is_rim_hook(shape))
print("\n".join(render({c: "#" for c in shape.cells()} | {(1, 1): ".", (1, 2): "."})))

# every way to add a rim hook of size 3 to (2,1)
print("\nrim hooks of size 3 added to (2,1):")
for mu, ht in addable_rim_hooks((2, 1), 3):
    print(f"  {format_partition(mu):12} height {ht}")
