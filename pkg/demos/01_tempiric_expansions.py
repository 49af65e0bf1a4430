import numpy as np

from lktmap import expand_k_irrep, m_mult
from lktmap.weights import dominant_weights_in_ball

# K-types of Sp(4) in a small ball, in the order used for inversion
ktypes = dominant_weights_in_ball(2, 18)
params = [tuple(c + 1 for c in s) for s in ktypes]

# Multiplicity matrix m: rows are K-types, columns are tempirics
m = np.array([[m_mult(tau, p) for p in params] for tau in ktypes])
print("m (lower unitriangular in this order):")
print(m)

# Its inverse, computed in floating point as a sanity check only
print("\ninverse via numpy, rounded:")
print(np.rint(np.linalg.inv(m)).astype(int))

# The engine's exact expansions are the columns of that inverse
for tau in [(0, 0), (1, 0), (1, 1), (2, 0)]:
    print(f"\n[{tau}] =", " ".join(f"{c:+d}{p}" for p, c in expand_k_irrep(tau)))
