"""Quasi-symmetry and geometric marginal homogeneity of square tables.

Probability tables are treated as points of a simplex with Aitchison
geometry. The package splits a square table into orthogonal symmetric /
skew-symmetric and independent / interaction parts, projects it onto the
quasi-symmetric and geometric-marginal-homogeneous subspaces, and reports the
skewness measures with their per-cell contributions.
"""
__version__ = "0.1.0"

from .core import (aitchison_distance, aitchison_inner, aitchison_norm,
                   aitchison_norm_sq, closure, clr, clr_inverse, col_geomeans,
                   e_geodesic, geometric_margins, geometric_mean, ominus,
                   perturb, power, row_geomeans, transpose, uniform)
from .decomposition import (DecompositionBundle, col_projection, four_part,
                            gmh_projection, independent_part, interaction_part,
                            is_quasi_symmetric, local_odds_ratios,
                            qs_projection, row_projection, skew_part,
                            skind_part, skint_part, symmetric_part)
from .errors import (DimMismatch, EmptyInput, InvalidParams, LambdaOutOfRange,
                     MalformedCsv, NonPositiveEntry, NotSquare, UnknownKind,
                     ZeroCellRejected)
from .measures import (ContributionArray, MeasureReport, contribution_array,
                       geometric_marginal_heterogeneity, measure_report,
                       simplicial_deviance, simplicial_quasi_skewness,
                       simplicial_skewness)
from .tableio import (CountTable, SmoothingPolicy, parse_counts_csv,
                      stuart_vision, to_probability)
