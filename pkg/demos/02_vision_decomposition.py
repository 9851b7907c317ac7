"""
Decomposing the unaided-vision table
====================================

Right-eye and left-eye vision grades of 7477 women. The table is split into
four mutually orthogonal parts; recombining them gives the nearest
quasi-symmetric (QS) and geometric marginal homogeneous (GMH) tables.
"""

import numpy as np

import simplicial_tables as st

np.set_printoptions(precision=4, suppress=True)

counts = st.stuart_vision()
P = st.to_probability(counts)
print("proportions\n", P)

bundle = st.four_part(P)
print("reconstructs the source:", np.allclose(bundle.reconstruct(), P))

print("\nnearest symmetric table\n", bundle.sym)
print("\nnearest QS table\n", bundle.qs)
print("\nnearest GMH table\n", bundle.gmh)

# QS keeps every geometric margin of the source ...
rows, cols = st.geometric_margins(P)
qs_rows, qs_cols = st.geometric_margins(bundle.qs)
print("\nQS keeps geometric margins:", np.allclose(rows, qs_rows), np.allclose(cols, qs_cols))

# ... and makes the local odds ratios symmetric
print("local odds ratios of the QS table\n", st.local_odds_ratios(bundle.qs))

# GMH equalises row and column geometric margins at their geometric mean
g_rows, g_cols = st.geometric_margins(bundle.gmh)
print("GMH row margins", g_rows)
print("GMH col margins", g_cols)

# The skewness splits into quasi-skewness and marginal heterogeneity
rep = st.measure_report(P)
print(f"\nE2 = {rep.E2:.4f} = Q2 {rep.Q2:.4f} + M2 {rep.M2:.4f}")
print(f"simplicial deviance from independence = {rep.deviance:.4f}")

for kind in ("skewness", "quasi_skewness", "heterogeneity"):
    print(f"\n{kind} array (%)\n", st.contribution_array(P, kind).percent)
