import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import vec3, vec4
from lorentz_skew.minkowski import (
    CausalClass,
    ComplexNullClass,
    classify,
    classify_complex_null,
    complex_inner,
    embed,
    four_vector,
    inner,
    rest_cross,
    rest_dot,
)


def test_inner_examples():
    assert inner([1, 0, 0, 0], [1, 0, 0, 0]) == -1
    assert inner([1, 1, 0, 0], [1, 1, 0, 0]) == 0
    # -0 + 1 + 3 - 1
    assert inner([2, 1, 3, -1], [0, 1, 1, 1]) == 3


def test_complex_inner_examples():
    assert complex_inner([1j, 0, 0, 0], [1, 0, 0, 0]) == -1j
    assert complex_inner([1, 1j, 0, 0], [1, 1j, 0, 0]) == -2
    assert complex_inner([0, 1, 1j, 0], [0, 1, -1j, 0]) == 2


def test_classify_examples():
    assert classify([1, 0, 0, 0]) is CausalClass.TIMELIKE
    assert classify([1, 1, 0, 0]) is CausalClass.NULL
    assert classify([1, 0, 0, 2]) is CausalClass.SPACELIKE
    assert classify([0, 0, 0, 0]) is CausalClass.ZERO
    assert classify([1e-12, 0, 0, 0]) is CausalClass.ZERO


def test_classify_rejects_bad_tol():
    with pytest.raises(ValueError):
        classify([1, 0, 0, 0], tol=0)


def test_classify_tolerance_from_env(monkeypatch):
    v = [1.0, 1.0 + 1e-6, 0, 0]
    assert classify(v) is CausalClass.SPACELIKE
    monkeypatch.setenv("LORENTZ_SKEW_TOL", "1e-4")
    assert classify(v) is CausalClass.NULL


def test_classify_complex_null_examples():
    assert (
        classify_complex_null([0, 1, 0, 0], [0, 0, 1, 0])
        is ComplexNullClass.SPACELIKE_ORTHONORMAL_PAIR
    )
    assert classify_complex_null([1, 1, 0, 0], [2, 2, 0, 0]) is ComplexNullClass.DEPENDENT_NULL
    assert classify_complex_null([0, 1, 0, 0], [0, 2, 0, 0]) is ComplexNullClass.NOT_NULL


def test_rest_products():
    assert rest_dot([1, 0, 0], [1, 0, 0]) == 1
    assert rest_dot([1, 2, 3], [3, 2, 1]) == 10
    assert rest_dot([1, 0, 0], [0, 1, 0]) == 0
    np.testing.assert_array_equal(rest_cross([1, 0, 0], [0, 1, 0]), [0, 0, 1])
    np.testing.assert_array_equal(rest_cross([1, 2, 3], [1, 2, 3]), [0, 0, 0])
    np.testing.assert_array_equal(rest_cross([1, 1, 0], [0, 1, 1]), [1, -1, 1])


def test_vector_validation():
    with pytest.raises(ValueError):
        four_vector([1, 2, 3])
    with pytest.raises(ValueError):
        four_vector([0, 0, np.nan, 0])
    np.testing.assert_array_equal(embed([1, 2, 3]), [0, 1, 2, 3])


@given(vec4, vec4, vec4, st.floats(-5, 5), st.floats(-5, 5))
def test_inner_bilinear_symmetric(u, v, w, a, b):
    scale = 1 + np.linalg.norm(u) * (abs(a) * np.linalg.norm(v) + abs(b) * np.linalg.norm(w))
    assert abs(inner(u, a * v + b * w) - (a * inner(u, v) + b * inner(u, w))) <= 1e-12 * scale
    assert inner(u, v) == inner(v, u)


@given(vec3, vec3, vec3)
def test_cross_identities(u, v, w):
    scale = 1 + np.linalg.norm(u) * np.linalg.norm(v) * np.linalg.norm(w)
    np.testing.assert_allclose(rest_cross(v, w), -rest_cross(w, v))
    lhs = rest_cross(rest_cross(u, v), w)
    rhs = rest_dot(w, u) * v - rest_dot(w, v) * u
    assert np.max(np.abs(lhs - rhs)) <= 1e-12 * scale
    assert abs(rest_dot(u, rest_cross(v, w)) + rest_dot(v, rest_cross(u, w))) <= 1e-12 * scale
    assert abs(rest_dot(v, rest_cross(v, w))) <= 1e-12 * scale
    np.testing.assert_array_equal(rest_cross(v, 2.0 * v), np.zeros(3))


@given(vec4, vec4)
def test_complex_inner_extends_inner(v, w):
    assert complex_inner(v, w) == pytest.approx(inner(v, w), rel=1e-12, abs=1e-12)
    assert complex_inner(1j * v, w) == pytest.approx(1j * complex_inner(v, w), abs=1e-9)


@given(vec4, st.permutations([1, 2, 3]))
def test_classify_spatial_permutation(v, perm):
    w = v[[0, *perm]]
    assert classify(v) is classify(w)


@given(vec3.filter(lambda a: np.linalg.norm(a) > 1e-2), vec3)
def test_orthogonal_spacelike_pair_has_positive_gram(a, helper):
    b = np.cross(a, helper)
    if np.linalg.norm(b) < 1e-3:
        return
    b *= np.linalg.norm(a) / np.linalg.norm(b)
    a4, b4 = embed(a), embed(b)
    assert inner(a4, a4) * inner(b4, b4) - inner(a4, b4) ** 2 > 0
