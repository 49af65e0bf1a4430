import numpy as np

from lktmap import build_orbit, largest_tempiric, pushforward
from lktmap.orbits import lift_with_shift
from lktmap.weights import norm_sq

# Principal orbit of GL(4, H): two determinant shifts, one per GL(2) block
o = build_orbit(4, [4])
tau = (9,)
ks = np.arange(-8, 3)

# Norm of the largest tempiric over the grid of shifts
grid = np.zeros((len(ks), len(ks)), dtype=int)
for i, k1 in enumerate(ks):
    for j, k2 in enumerate(ks):
        v = pushforward(o, lift_with_shift(o, tau, (k1, k2)))
        grid[i, j] = norm_sq(largest_tempiric(v))

print("rows k1, columns k2, entries |largest parameter|^2")
print("      " + " ".join(f"{k:4d}" for k in ks))
for k1, row in zip(ks, grid):
    print(f"{k1:4d}  " + " ".join(f"{x:4d}" for x in row))

# Where the minimum sits
i, j = np.unravel_index(grid.argmin(), grid.shape)
print(f"\nminimum {grid.min()} first reached at k = ({ks[i]}, {ks[j]})")
print("the shift (-6, -2) gives", grid[list(ks).index(-6), list(ks).index(-2)])
