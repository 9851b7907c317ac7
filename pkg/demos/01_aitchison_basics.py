"""
Aitchison geometry on probability tables
========================================

Tables with positive entries summing to one form a vector space once
"addition" is cellwise multiplication followed by closure. Everything here
happens in clr coordinates, where that space is an ordinary Euclidean one.
"""

import numpy as np

import simplicial_tables as st

# closure rescales any positive table to unit sum
P = st.closure([[4, 2], [1, 3]])
Q = st.closure([[1, 1], [2, 5]])
print("P =\n", P)

# perturbation is the vector addition, the uniform table its neutral element
N = st.uniform((2, 2))
print("P (+) uniform == P:", np.allclose(st.perturb(P, N), P))
print("P (-) P == uniform:", np.allclose(st.ominus(P, P), N))

# powering is the scalar multiplication
print("2 (.) P =\n", st.power(2, P))

# clr maps the table onto the zero-sum hyperplane; clr_inverse undoes it
c = st.clr(P)
print("clr(P) sums to", c.sum())
print("round trip ok:", np.allclose(st.clr_inverse(c), P))

# the inner product, norm and distance are the Euclidean ones of clr
print("||P||_A^2 =", st.aitchison_norm_sq(P))
print("d_A(P, Q) =", st.aitchison_distance(P, Q))
print("same as ||P (-) Q||_A:", st.aitchison_norm(st.ominus(P, Q)))

# e-geodesics are straight lines in clr coordinates
for lam in (0.0, 0.5, 1.0):
    R = st.e_geodesic(P, Q, lam)
    print(f"lambda={lam}: d(P, R) = {st.aitchison_distance(P, R):.6f}")
