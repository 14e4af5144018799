import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from solowline import (
    ArgumentError,
    DegenerateTriple,
    DomainError,
    GapVector,
    KernelFunction,
    LineInstance,
    SingularMatrix,
    build_similarity_matrix,
    diversity_gap_sum,
    diversity_matrix,
    three_point_excess,
    two_point_excess,
)
from solowline.diversity import diversity_from_similarity, l1_distance_matrix

from conftest import line_instances, random_instance


def inverse_oracle(z):
    """Explicit-inverse route, kept separate from the LU solve under test."""
    return float(np.ones(len(z)) @ np.linalg.inv(z) @ np.ones(len(z)))


def rational_gap_sum(coords, beta):
    """Gap sum in the (1 - a) / (1 + a) form with a = exp(-beta * gap)."""
    a = np.exp(-beta * np.diff(coords))
    return 1.0 + float(np.sum((1 - a) / (1 + a)))


# --- types -----------------------------------------------------------------

def test_line_instance_rejects_duplicates_and_disorder():
    with pytest.raises(ArgumentError):
        LineInstance([0.0, 1.0, 1.0])
    with pytest.raises(ArgumentError):
        LineInstance([1.0, 0.0])
    with pytest.raises(ArgumentError):
        LineInstance([])


def test_dedupe_then_build_collapses_exact_duplicates():
    inst = LineInstance.dedupe_then_build([2.0, 0.0, 1.0, 1.0, 0.0])
    np.testing.assert_array_equal(inst.coords, [0.0, 1.0, 2.0])


def test_line_instance_is_immutable():
    inst = LineInstance([0.0, 1.0])
    with pytest.raises(ValueError):
        inst.coords[0] = 5.0


def test_gap_vector_span_and_positivity():
    g = GapVector.from_points([0.0, 0.25, 1.0, 1.5])
    np.testing.assert_allclose(g.gaps, [0.25, 0.75, 0.5])
    assert g.span == pytest.approx(1.5, abs=1e-15)
    with pytest.raises(ArgumentError):
        GapVector([0.1, 0.0])


def test_kernel_validation():
    with pytest.raises(ArgumentError):
        KernelFunction.exponential(0.0)
    with pytest.raises(ArgumentError):
        KernelFunction.custom(lambda t: 0.5 + 0 * t).validate()
    bumpy = KernelFunction.custom(lambda t: np.exp(-t) * (1 + 0.5 * np.sin(5 * t) ** 2) / 1.0)
    with pytest.raises(ArgumentError):
        bumpy.validate(3.0)
    assert KernelFunction.exponential(2.0)(0.0) == 1.0


# --- build_similarity_matrix -------------------------------------------------

def test_similarity_singleton():
    np.testing.assert_array_equal(build_similarity_matrix([0.0], KernelFunction.exponential(3.0)), [[1.0]])


def test_similarity_two_points():
    beta, t = 1.7, 0.8
    z = build_similarity_matrix([0.0, t], KernelFunction.exponential(beta))
    r = math.exp(-beta * t)
    np.testing.assert_allclose(z, [[1, r], [r, 1]], rtol=1e-15)


def test_similarity_three_points_custom_kernel():
    a, b = 0.4, 1.1
    k = KernelFunction.custom(lambda t: 1.0 / (1.0 + t), name="rational")
    u, v, w = 1 / (1 + a), 1 / (1 + b), 1 / (1 + a + b)
    z = build_similarity_matrix([0.0, a, a + b], k)
    np.testing.assert_allclose(z, [[1, u, w], [u, 1, v], [w, v, 1]], rtol=1e-15)
    np.testing.assert_array_equal(z, z.T)


# --- diversity_matrix ------------------------------------------------------------

def test_matrix_singleton_is_one():
    assert diversity_matrix([4.2], KernelFunction.exponential(1.0)).value == 1.0


@pytest.mark.parametrize("beta,t", [(1.0, 0.3), (0.1, 5.0), (10.0, 0.01)])
def test_matrix_two_points_closed_form(beta, t):
    r = math.exp(-beta * t)
    assert diversity_matrix([0.0, t], KernelFunction.exponential(beta)).value == pytest.approx(2 / (1 + r), abs=1e-14)


def test_matrix_agrees_with_gap_sum_random_eight(rng):
    inst = random_instance(rng, 8)
    m = diversity_matrix(inst, KernelFunction.exponential(1.0)).value
    assert m == pytest.approx(diversity_gap_sum(inst, 1.0).value, abs=1e-10)


def test_matrix_agrees_with_explicit_inverse(rng):
    inst = random_instance(rng, 12, 0, 3)
    k = KernelFunction.custom(lambda t: 1 / (1 + t))
    z = build_similarity_matrix(inst, k)
    assert diversity_matrix(inst, k).value == pytest.approx(inverse_oracle(z), rel=1e-10)


def test_singular_matrix_detected():
    z = np.ones((3, 3))
    with pytest.raises(SingularMatrix):
        diversity_from_similarity(z)
    # nearly coincident points
    with pytest.raises(SingularMatrix):
        diversity_matrix([0.0, 1e-14, 1.0], KernelFunction.exponential(1.0))


def test_l1_distance_matrix():
    d = l1_distance_matrix([[0, 0], [1, 2], [3, -1]])
    np.testing.assert_array_equal(d, [[0, 3, 4], [3, 0, 5], [4, 5, 0]])


# --- diversity_gap_sum -------------------------------------------------------------

def test_gap_sum_uniform_ten_points_unit_interval():
    x = np.arange(10) / 9
    assert diversity_gap_sum(x, 1.0).value == pytest.approx(1 + 9 * math.tanh(1 / 18), abs=1e-14)


def test_gap_sum_uniform_ten_points_on_minus_one_one():
    x = -1 + 2 * np.arange(10) / 9
    assert diversity_gap_sum(x, 1.0).value == pytest.approx(1.995905, abs=1e-6)


def test_gap_sum_singleton():
    d = diversity_gap_sum([3.0], 2.0)
    assert d.value == 1.0 and d.excess == 0.0


def test_gap_sum_dense_front_gaps():
    gaps = [0.223903, 0.220542, 0.206679, 0.233564, 0.226423, 0.210460, 0.225583, 0.240706, 0.212140]
    x = np.concatenate([[0.0], np.cumsum(gaps)])
    assert diversity_gap_sum(x, 1.0).value == pytest.approx(1.995878, abs=5e-6)


def test_gap_sum_matches_rational_form(rng):
    for beta in (0.1, 1.0, 10.0):
        inst = random_instance(rng, 20)
        assert diversity_gap_sum(inst, beta).value == pytest.approx(rational_gap_sum(inst.coords, beta), abs=1e-13)


def test_gap_sum_stable_for_large_gaps():
    # tanh saturates cleanly where the rational form loses everything to exp underflow
    assert diversity_gap_sum([0.0, 1e4], 10.0).value == 2.0


def test_excess_is_value_minus_one():
    d = diversity_gap_sum([0.0, 0.3, 1.1], 1.3)
    assert d.excess == d.value - 1.0


# --- closed-form excesses -----------------------------------------------------------

def test_two_point_excess():
    assert two_point_excess(1 / 3) == pytest.approx(0.5, abs=1e-15)
    assert two_point_excess(1 - 1e-12) < 1e-11
    beta, t = 1.4, 0.9
    assert two_point_excess(math.exp(-beta * t)) == pytest.approx(math.tanh(beta * t / 2), abs=1e-15)
    for bad in (0.0, 1.0, -0.2, 1.5):
        with pytest.raises(DomainError):
            two_point_excess(bad)


def test_three_point_excess_matches_matrix_route():
    u, v, w = 0.7, 0.5, 0.3
    z = np.array([[1, u, w], [u, 1, v], [w, v, 1]])
    assert three_point_excess(u, v, w) == pytest.approx(inverse_oracle(z) - 1, abs=1e-13)


def test_three_point_excess_near_coincident():
    eps = 1e-6
    e = three_point_excess(1 - eps, 1 - eps, 1 - 2 * eps + eps**2)
    assert 0 < e < 10 * eps


@pytest.mark.parametrize("a,b", [(0.3, 0.7), (1.0, 1.0), (2.5, 0.01)])
def test_three_point_exponential_additivity(a, b):
    u, v = math.exp(-a), math.exp(-b)
    assert three_point_excess(u, v, u * v) == pytest.approx(two_point_excess(u) + two_point_excess(v), abs=1e-12)


def test_three_point_gaussian_not_additive():
    u = v = math.exp(-1.0)
    w = math.exp(-4.0)
    assert abs(three_point_excess(u, v, w) - two_point_excess(u) - two_point_excess(v)) > 1e-3


def test_three_point_degenerate():
    # det Z = (1-u^2)(1-v^2) - (w-uv)^2 vanishes at w = uv + sqrt((1-u^2)(1-v^2))
    with pytest.raises(DegenerateTriple):
        three_point_excess(0.6, 0.8, 0.96)


# --- properties -----------------------------------------------------------------------

@settings(max_examples=150, deadline=None)
@given(inst=line_instances(max_size=50), beta=st.sampled_from([0.1, 1.0, 10.0]))
def test_oracle_equivalence(inst, beta):
    m = diversity_matrix(inst, KernelFunction.exponential(beta)).value
    g = diversity_gap_sum(inst, beta).value
    assert abs(m - g) <= 1e-9 * len(inst)


@settings(max_examples=100, deadline=None)
@given(inst=line_instances(max_size=30), extra=st.floats(1e-3, 10), beta=st.floats(0.05, 20))
def test_extending_beyond_maximum_increases_diversity(inst, extra, beta):
    longer = LineInstance(np.append(inst.coords, inst.coords[-1] + extra))
    assert diversity_gap_sum(longer, beta).value > diversity_gap_sum(inst, beta).value


@settings(max_examples=100, deadline=None)
@given(inst=line_instances(max_size=30), beta=st.floats(0.05, 20))
def test_reflection_invariance(inst, beta):
    assert diversity_gap_sum(inst.reflected(), beta).value == pytest.approx(diversity_gap_sum(inst, beta).value, abs=1e-12)


@settings(max_examples=100, deadline=None)
@given(inst=line_instances(max_size=30), shift=st.floats(-50, 50), beta=st.floats(0.05, 20))
def test_translation_invariance(inst, shift, beta):
    moved = LineInstance(inst.coords + shift)
    # shifting rounds each coordinate, so gaps move by a few ulps of the coordinates
    tol = 1e-12 + 4 * len(inst) * beta * np.finfo(float).eps * (abs(shift) + np.max(np.abs(inst.coords)))
    assert abs(diversity_gap_sum(moved, beta).value - diversity_gap_sum(inst, beta).value) <= tol
