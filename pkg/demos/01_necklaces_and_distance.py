"""Necklaces, frequency vectors, and the ultrametric they induce.

Walks through the basic objects: canonical rotations, exact necklace counts,
window-count projections, and the distance d(a, b) = exp(-gamma_max).
"""

from cycseq import (
    canonicalize,
    enumerate_necklaces,
    gamma_max,
    level1_cluster_size,
    necklace_count,
    project,
    raise_level,
    ultrametric_distance,
)

# Every cyclic sequence is stored as its numerically maximal rotation.
s = canonicalize([0, 0, 1, 0, 1, 1], 2)
print("canonical form of 001011:", s, "(index", s.index(), ")")

# Exact counts: Burnside over rotations.
for n in (3, 7, 11):
    print(f"binary necklaces of length {n}:", necklace_count(n, 2))

print("necklaces of length 4 over three letters:", necklace_count(4, 3))
print("length-5 binary necklaces, largest index first:")
for t in enumerate_necklaces(5, 2):
    print("  ", t)

# Clusters at level 1 are letter compositions; their sizes are exact.
print("\nsequences of length 11 with exactly five 1s:", level1_cluster_size([6, 5]))

# The projection counts cyclic windows; raising merges counts one level up.
x3 = project(s, 3)
print("\n3-window counts of", s, "->", x3.dense())
print("raised to 2-windows:", raise_level(x3).dense())
print("direct 2-window counts:", project(s, 2).dense())

# Two sequences are p-close when their p-window counts agree; the largest
# such p turns into an ultrametric distance.
a = canonicalize([1, 1, 1, 0, 1, 0, 0, 0], 2)
b = canonicalize([1, 1, 1, 0, 0, 0, 1, 0], 2)
print("\na =", a, " b =", b)
print("gamma_max:", gamma_max(a, b))
print("distance: exp(-gamma) =", ultrametric_distance(a, b))
