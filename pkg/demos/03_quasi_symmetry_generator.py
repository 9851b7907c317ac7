"""
Quasi-symmetry from the generative form
=======================================

A table p_ij proportional to alpha_i * beta_j * psi_ij with symmetric psi is
quasi-symmetric whatever the margins. Its quasi-skewness vanishes, so all of
its skewness comes from the geometric margins.
"""

import numpy as np

import simplicial_tables as st
from simplicial_tables.oracle import QsGeneratorParams, qs_generate

np.set_printoptions(precision=4, suppress=True)

rng = np.random.default_rng(7)
psi = rng.uniform(0.5, 2.0, size=(4, 4))
psi = np.sqrt(psi * psi.T)

params = QsGeneratorParams(alpha=np.array([1.0, 2.0, 3.0, 1.5]),
                           beta=np.array([2.0, 1.0, 1.0, 3.0]), psi=psi)
P = qs_generate(params)
theta = st.local_odds_ratios(P)
print("local odds ratios\n", theta)
print("symmetric:", st.is_quasi_symmetric(P))

rep = st.measure_report(P)
print(f"Q2 = {rep.Q2:.2e}, M2 = {rep.M2:.4f}, E2 = {rep.E2:.4f}")

# equal alpha and beta give a fully symmetric table
P_sym = qs_generate(QsGeneratorParams(np.ones(4), np.ones(4), psi))
print("equal margins -> E2 =", st.measure_report(P_sym).E2)

# perturbing one cell breaks quasi-symmetry and Q2 becomes positive
bumped = P.copy()
bumped[0, 3] *= 1.5
print("after a bump: Q2 =", st.simplicial_quasi_skewness(st.closure(bumped)))
