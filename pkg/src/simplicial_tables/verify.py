"""The numerical verification suite behind ``simplicial-tables verify``."""
from dataclasses import dataclass

import numpy as np

from .measures import measure_report
from .oracle import (CLOSED_FORM, SUBSPACE_KINDS, basis_projection,
                     expected_dimension, minimality_probe, random_table,
                     subspace_basis)

EQUIVALENCE_TOL = 1e-9
IDENTITY_TOL = 1e-10


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str

    def line(self):
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.name}: {self.detail}"


def _seed(root, *parts):
    # deterministic per-check seed derived from the root
    return int(np.random.SeedSequence([root % 2 ** 63, *parts]).generate_state(1)[0])


def check_dimensions(I):
    out = []
    ranks = {}
    for kind in SUBSPACE_KINDS:
        ranks[kind] = len(subspace_basis(kind, I))
        want = expected_dimension(kind, I)
        out.append(CheckResult(f"dim {kind} I={I}", ranks[kind] == want,
                               f"rank {ranks[kind]}, expected {want}"))
    total = sum(ranks[k] for k in ("syind", "skind", "syint", "skint"))
    out.append(CheckResult(f"dim four parts I={I}", total == I * I - 1,
                           f"sum {total}, expected {I * I - 1}"))
    return out


def check_equivalence(I, trials, seed, projections):
    out = []
    bases = {k: subspace_basis(k, I) for k in SUBSPACE_KINDS}
    worst = dict.fromkeys(SUBSPACE_KINDS, 0.0)
    for t in range(trials):
        P = random_table(I, I, _seed(seed, I, t))
        for kind in SUBSPACE_KINDS:
            err = np.max(np.abs(projections[kind](P)
                                - basis_projection(P, kind, bases[kind])))
            worst[kind] = max(worst[kind], float(err))
    for kind in SUBSPACE_KINDS:
        out.append(CheckResult(
            f"oracle {kind} I={I}", worst[kind] <= EQUIVALENCE_TOL,
            f"max entry error {worst[kind]:.2e} over {trials} tables"))
    return out


def check_minimality(I, trials, seed, projections):
    P = random_table(I, I, _seed(seed, I, 10_000))
    out = []
    for n, kind in enumerate(("QS", "GMH")):
        ok = minimality_probe(P, kind, trials, _seed(seed, I, 20_000 + n),
                              projection=projections[kind])
        out.append(CheckResult(f"minimality {kind} I={I}", ok,
                               f"{trials} random subspace members"))
    return out


def check_skewness_identity(I, trials, seed):
    worst = 0.0
    for t in range(trials):
        rep = measure_report(random_table(I, I, _seed(seed, I, 30_000 + t)))
        worst = max(worst, abs(rep.E2 - rep.Q2 - rep.M2))
    return [CheckResult(f"E2 = Q2 + M2 I={I}", worst <= IDENTITY_TOL,
                        f"max residual {worst:.2e} over {trials} tables")]


def run_checks(sizes=range(2, 7), trials=1000, seed=0, projections=None):
    """Run every check and return the list of :class:`CheckResult`.

    `projections` maps subspace kinds to replacement projection functions,
    letting tests confirm that a broken projection is caught.
    """
    proj = dict(CLOSED_FORM)
    if projections:
        proj.update(projections)
    results = []
    for I in sizes:
        results += check_dimensions(I)
        results += check_equivalence(I, trials, seed, proj)
        results += check_minimality(I, trials, seed, proj)
        results += check_skewness_identity(I, trials, seed)
    return results
