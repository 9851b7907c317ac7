import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st
from numpy.testing import assert_allclose

from simplicial_tables import core
from simplicial_tables.core import (aitchison_distance, aitchison_inner,
                                    aitchison_norm, as_table, closure, clr,
                                    clr_inverse, col_geomeans, e_geodesic,
                                    geometric_margins, geometric_mean, ominus,
                                    perturb, power, row_geomeans, transpose,
                                    uniform)
from simplicial_tables.decomposition import symmetric_part
from simplicial_tables.errors import (DimMismatch, LambdaOutOfRange,
                                      NonPositiveEntry, NotSquare)
from simplicial_tables.oracle import random_table

from conftest import log_tables

TABLE_2 = np.array([
    [0.2033, 0.0356, 0.0166, 0.0088],
    [0.0313, 0.2022, 0.0578, 0.0104],
    [0.0156, 0.0484, 0.2370, 0.0274],
    [0.0048, 0.0110, 0.0239, 0.0658],
])


def random_tables(count, seed=0):
    rng = np.random.default_rng(seed)
    for _ in range(count):
        I, J = rng.integers(2, 7, size=2)
        yield clr_inverse(rng.standard_normal((I, J)))


class TestClosure:
    def test_simple(self):
        assert_allclose(closure([1, 1, 2]), [0.25, 0.25, 0.5], atol=1e-15)
        assert_allclose(closure([[1], [1], [2]]).ravel(), [0.25, 0.25, 0.5])

    def test_one_row_table_rejected(self):
        with pytest.raises(DimMismatch):
            as_table([[1, 1, 2]])

    def test_idempotent(self, stuart):
        assert_allclose(closure(stuart), stuart, rtol=1e-15)

    @pytest.mark.parametrize("bad", [
        [1.0, 0.0, 2.0], [1.0, -1.0, 2.0], [1.0, np.nan, 2.0], [1.0, np.inf, 1.0]])
    def test_rejects_non_positive(self, bad):
        with pytest.raises(NonPositiveEntry):
            closure(bad)

    def test_stuart_proportions(self, stuart):
        assert stuart[0, 0] == pytest.approx(1520 / 7477, abs=1e-15)
        assert_allclose(stuart, TABLE_2, atol=5e-5)

    @given(st.floats(1e-3, 1e3))
    def test_scale_invariance(self, c):
        raw = np.array([[3.0, 1.0], [0.5, 7.0]])
        assert_allclose(closure(c * raw), closure(raw), atol=1e-15)

    def test_input_not_mutated(self):
        raw = np.array([[2.0, 2.0], [4.0, 8.0]])
        closure(raw)
        assert raw[1, 1] == 8.0


class TestGroupOperations:
    def test_perturb_example(self):
        assert_allclose(perturb([0.5, 0.5], [0.8, 0.2]), [0.8, 0.2], atol=1e-15)

    def test_uniform_is_identity(self, stuart):
        assert_allclose(perturb(stuart, uniform((4, 4))), stuart, atol=1e-15)

    def test_power_example(self):
        assert_allclose(power(2, [0.8, 0.2]), [0.64 / 0.68, 0.04 / 0.68], atol=1e-15)
        assert_allclose(power(2, [0.8, 0.2]), [0.9412, 0.0588], atol=5e-5)

    def test_power_zero_and_inverse(self, stuart):
        assert_allclose(power(0, stuart), uniform((4, 4)), atol=1e-15)
        assert_allclose(perturb(power(-1, stuart), stuart), uniform((4, 4)), atol=1e-15)
        assert_allclose(power(1, stuart), stuart, atol=1e-15)

    def test_power_rejects_nonfinite(self, stuart):
        with pytest.raises(ValueError):
            power(np.nan, stuart)

    def test_ominus(self):
        assert_allclose(ominus([0.8, 0.2], [0.8, 0.2]), [0.5, 0.5], atol=1e-15)
        P, Q = random_table(3, 5, 1), random_table(3, 5, 2)
        assert_allclose(ominus(perturb(P, Q), Q), P, atol=1e-14)
        assert_allclose(ominus(P, Q), perturb(P, power(-1, Q)), atol=1e-15)

    def test_shape_mismatch(self):
        with pytest.raises(DimMismatch):
            perturb(uniform((2, 2)), uniform((2, 3)))
        with pytest.raises(DimMismatch):
            aitchison_inner(uniform((2, 2)), uniform((3, 2)))

    def test_perturb_matches_direct_product(self):
        P, Q = random_table(4, 4, 5), random_table(4, 4, 6)
        assert_allclose(perturb(P, Q), closure(P * Q), rtol=1e-12)
        assert_allclose(power(1.7, P), closure(P ** 1.7), rtol=1e-12)

    def test_vector_space_axioms(self):
        rng = np.random.default_rng(7)
        for P in random_tables(1000, seed=11):
            Q = clr_inverse(rng.standard_normal(P.shape))
            a, b = rng.normal(scale=2, size=2)
            assert_allclose(power(a + b, P), perturb(power(a, P), power(b, P)), atol=1e-12)
            assert_allclose(power(a, perturb(P, Q)), perturb(power(a, P), power(a, Q)),
                            atol=1e-12)
            assert_allclose(perturb(P, Q), perturb(Q, P), atol=1e-15)
            assert_allclose(clr(perturb(power(a, P), Q)), a * clr(P) + clr(Q), atol=1e-12)
            assert_allclose(closure(3.5 * P), closure(P), atol=1e-15)
            if P.shape[0] == P.shape[1]:
                assert_allclose(clr(transpose(P)), clr(P).T, atol=1e-15)

    def test_associative(self):
        P, Q, R = (random_table(3, 3, s) for s in (1, 2, 3))
        assert_allclose(perturb(perturb(P, Q), R), perturb(P, perturb(Q, R)), atol=1e-15)


class TestTranspose:
    def test_involution(self, stuart):
        assert_allclose(transpose(transpose(stuart)), stuart)

    def test_symmetric_fixed(self):
        S = closure([[3.0, 1.0], [1.0, 2.0]])
        assert_allclose(transpose(S), S)

    def test_stuart_swap(self, stuart):
        T = transpose(stuart)
        assert T[0, 1] == pytest.approx(0.0313, abs=5e-5)
        assert T[1, 0] == pytest.approx(0.0356, abs=5e-5)

    def test_not_square(self):
        with pytest.raises(NotSquare):
            transpose(uniform((2, 3)))


class TestGeometricMeans:
    def test_uniform(self):
        assert geometric_mean(uniform((3, 4))) == pytest.approx(1 / 12, rel=1e-14)
        assert_allclose(row_geomeans(uniform((3, 4))), 1 / 12)
        assert_allclose(col_geomeans(uniform((3, 4))), 1 / 12)

    def test_hand_values(self):
        # direct products: (0.25*0.25*0.5)^(1/3) and (0.4*0.2*0.1*0.3)^(1/4)
        assert geometric_mean([0.25, 0.25, 0.5]) == pytest.approx(0.3149802624737183, rel=1e-14)
        P = closure([[4, 2], [1, 3]])
        assert geometric_mean(P) == pytest.approx(0.22133638394006433, rel=1e-14)

    def test_no_underflow(self):
        P = closure(np.full((40, 40), 1.0))
        assert geometric_mean(P) == pytest.approx(1 / 1600)

    def test_stuart_margins(self, stuart):
        rows, cols = geometric_margins(stuart)
        assert_allclose(rows, [0.2285, 0.3149, 0.3356, 0.1210], atol=5e-5)
        assert_allclose(cols, [0.1893, 0.3181, 0.3474, 0.1452], atol=5e-5)

    def test_row_geomeans_match_products(self):
        P = random_table(3, 5, 4)
        direct = [math.prod(r) ** (1 / 5) for r in P]
        assert_allclose(row_geomeans(P), direct, rtol=1e-12)


class TestClr:
    def test_uniform_is_zero(self):
        assert_allclose(clr(uniform((3, 3))), 0, atol=1e-15)

    def test_hand_value(self):
        expected = [-0.2310490601866484, -0.2310490601866484, 0.4620981203732969]
        assert_allclose(clr(closure([1, 1, 2])), expected, atol=1e-15)

    def test_zero_sum(self):
        for P in random_tables(50):
            assert core.is_clr(clr(P))

    def test_round_trip(self, stuart):
        assert_allclose(clr_inverse(clr(stuart)), stuart, atol=1e-12)
        assert_allclose(clr_inverse(np.zeros((3, 2))), uniform((3, 2)))

    def test_centres_input(self, stuart):
        assert_allclose(clr_inverse(clr(stuart) + 4.2), stuart, atol=1e-12)
        assert_allclose(clr_inverse(2 * clr(stuart)), power(2, stuart), atol=1e-15)

    @given(log_tables(), log_tables())
    def test_linearity(self, P, Q):
        if P.shape != Q.shape:
            return
        assert_allclose(clr(perturb(P, Q)), clr(P) + clr(Q), atol=1e-12)


class TestMetric:
    def test_zero_norm(self):
        assert aitchison_norm(uniform((4, 4))) == 0.0

    def test_inner_is_clr_dot(self):
        P, Q = random_table(3, 4, 1), random_table(3, 4, 2)
        assert aitchison_inner(P, Q) == pytest.approx(float(np.sum(clr(P) * clr(Q))))

    def test_distance_is_norm_of_difference(self):
        P, Q = random_table(4, 4, 8), random_table(4, 4, 9)
        assert aitchison_distance(P, Q) == pytest.approx(aitchison_norm(ominus(P, Q)), rel=1e-12)

    @given(log_tables(3, 3), log_tables(3, 3), log_tables(3, 3))
    def test_metric_axioms(self, P, Q, R):
        d = aitchison_distance
        assert d(P, P) == 0
        assert d(P, Q) == pytest.approx(d(Q, P))
        assert d(P, R) <= d(P, Q) + d(Q, R) + 1e-12


class TestGeodesic:
    def test_endpoints(self):
        P, Q = random_table(3, 3, 1), random_table(3, 3, 2)
        assert_allclose(e_geodesic(P, Q, 0), P, atol=1e-15)
        assert_allclose(e_geodesic(P, Q, 1), Q, atol=1e-15)

    def test_midpoint_with_transpose_is_symmetric_part(self, stuart):
        assert_allclose(e_geodesic(stuart, transpose(stuart), 0.5),
                        symmetric_part(stuart), atol=1e-15)

    @pytest.mark.parametrize("lam", [0.25, 0.5, 0.75])
    def test_distance_linear(self, lam):
        for s in range(20):
            P, Q = random_table(3, 3, 2 * s), random_table(3, 3, 2 * s + 1)
            G = e_geodesic(P, Q, lam)
            assert aitchison_distance(P, G) == pytest.approx(lam * aitchison_distance(P, Q),
                                                             rel=1e-12)
            assert_allclose(clr(G), (1 - lam) * clr(P) + lam * clr(Q), atol=1e-12)

    @pytest.mark.parametrize("lam", [-0.1, 1.5, np.nan])
    def test_out_of_range(self, lam):
        with pytest.raises(LambdaOutOfRange):
            e_geodesic(uniform((2, 2)), uniform((2, 2)), lam)
