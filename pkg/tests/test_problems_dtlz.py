"""DTLZ evaluation tests: hand-derived points, front geometry, and a
cross-implementation oracle."""

import math

import numpy as np
import pytest

from f4m.problems import dtlz_eval, dtlz_dimension, make_problem

from dtlz_reference import dtlz_reference

SQRT2_2 = math.sqrt(2.0) / 2.0


@pytest.mark.parametrize("variant", [1, 2, 3, 4])
@pytest.mark.parametrize("q", [2, 3])
def test_matches_independent_reference(variant, q):
    rng = np.random.default_rng(10 * variant + q)
    d = dtlz_dimension(variant, q)
    xs = rng.random((5, d))
    ref = dtlz_reference(variant, xs, q)
    mine = np.array([dtlz_eval(variant, x, q) for x in xs])
    assert mine == pytest.approx(ref, rel=1e-12, abs=1e-12)


def test_dimensions_match_variant():
    assert dtlz_dimension(1, 3) == 7
    for v in (2, 3, 4):
        assert dtlz_dimension(v, 3) == 12
    assert dtlz_dimension(2, 2) == 11


def test_dtlz2_all_half_point():
    f = dtlz_eval(2, np.full(12, 0.5), 3)
    assert f == pytest.approx([0.5, 0.5, SQRT2_2], abs=1e-12)


def test_dtlz2_two_objective_quarter_circle_point():
    x = np.full(11, 0.5)
    f = dtlz_eval(2, x, 2)
    assert f == pytest.approx([SQRT2_2, SQRT2_2], abs=1e-12)
    assert f[0] ** 2 + f[1] ** 2 == pytest.approx(1.0, abs=1e-12)


def test_dtlz1_front_sum_is_half():
    rng = np.random.default_rng(0)
    for _ in range(50):
        x = np.empty(7)
        x[:2] = rng.random(2)
        x[2:] = 0.5  # distance variables at their optimum: g = 0
        f = dtlz_eval(1, x, 3)
        assert f.sum() == pytest.approx(0.5, abs=1e-9)
        assert np.all(f >= 0)


@pytest.mark.parametrize("variant", [2, 3, 4])
def test_sphere_front_at_distance_optimum(variant):
    rng = np.random.default_rng(variant)
    for _ in range(100):
        x = np.empty(12)
        x[:2] = rng.random(2)
        x[2:] = 0.5
        f = dtlz_eval(variant, x, 3)
        assert abs(np.sum(f**2) - 1.0) < 1e-9


def test_dtlz3_off_front_is_scaled_sphere():
    x = np.full(12, 0.25)
    f = dtlz_eval(3, x, 3)
    g = 100.0 * (10 + 10 * (0.0625 - math.cos(-5 * math.pi)))
    assert np.sum(f**2) == pytest.approx((1 + g) ** 2, rel=1e-12)


def test_dtlz4_bias_collapses_position_values():
    # position value 0.9 ** 100 ~ 0: objectives collapse toward the f_q axis
    x = np.full(12, 0.5)
    x[:2] = 0.9
    f = dtlz_eval(4, x, 3)
    assert f[0] == pytest.approx(1.0, abs=1e-4)
    assert f[1] == pytest.approx(0.0, abs=1e-4)
    assert f[2] == pytest.approx(0.0, abs=1e-4)


def test_out_of_bounds_rejected():
    x = np.full(12, 0.5)
    x[0] = 1.5
    with pytest.raises(ValueError, match="bounds"):
        dtlz_eval(2, x, 3)
    with pytest.raises(ValueError, match="bounds"):
        dtlz_eval(2, np.full(12, -0.1), 3)


def test_unsupported_variant_rejected():
    with pytest.raises(ValueError, match="variant"):
        dtlz_eval(5, np.full(12, 0.5), 3)


def test_wrong_dimension_rejected():
    with pytest.raises(ValueError, match="expects d="):
        dtlz_eval(2, np.full(7, 0.5), 3)


def test_registry_round_trip():
    prob = make_problem("dtlz2", q=3)
    assert prob.spec.d == 12
    assert prob.spec.m == 3
    f = prob.evaluate(np.full(12, 0.5))
    assert f == pytest.approx([0.5, 0.5, SQRT2_2], abs=1e-12)
