"""
Checking the closed forms against brute force
=============================================

Each subspace gets an orthonormal basis built from integer generator tables
in clr space. Projecting onto that basis must agree with the closed-form
projection, and no random member of the subspace may come closer.
"""

import numpy as np

from simplicial_tables import aitchison_distance, qs_projection
from simplicial_tables.oracle import (basis_projection, expected_dimension,
                                      minimality_probe, random_table,
                                      subspace_basis)
from simplicial_tables.verify import run_checks

for I in range(2, 7):
    dims = {k: len(subspace_basis(k, I)) for k in ("QS", "GMH", "sym", "skew")}
    print(f"I={I}: {dims}")
    assert all(dims[k] == expected_dimension(k, I) for k in dims)

P = random_table(5, 5, seed=3)
diff = np.abs(basis_projection(P, "QS") - qs_projection(P)).max()
print("max |basis - closed form| for QS:", diff)

print("minimality holds:", minimality_probe(P, "QS", trials=1000, seed=0))
print("distance to QS:", aitchison_distance(P, qs_projection(P)))

# a small version of the `simplicial-tables verify` run
results = run_checks(sizes=[3, 4], trials=50, seed=1)
for r in results:
    print(r.line())
