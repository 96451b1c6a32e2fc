"""Vector algebra in a fixed oriented orthonormal Minkowski frame.

Four-vectors are numpy arrays ordered ``(t, x, y, z)`` with signature
``-+++`` and ``c = 1``.  Spatial vectors are 3-arrays in the rest space of the
standard observer ``u = e0``.  Orientation is fixed by ``e1 x e2 = e3``.
"""

import enum

import numpy as np

from .tolerance import default_tol

#: the Lorentz metric as a matrix, ``<v, w> = v @ METRIC @ w``
METRIC = np.diag([-1.0, 1.0, 1.0, 1.0])
#: the standard observer
E0 = np.array([1.0, 0.0, 0.0, 0.0])


class CausalClass(enum.Enum):
    TIMELIKE = "timelike"
    SPACELIKE = "spacelike"
    NULL = "null"
    ZERO = "zero"


class ComplexNullClass(enum.Enum):
    NOT_NULL = "not_null"
    DEPENDENT_NULL = "dependent_null"
    SPACELIKE_ORTHONORMAL_PAIR = "spacelike_orthonormal_pair"


def four_vector(v, dtype=float):
    """Validate and convert ``v`` to a finite length-4 array."""
    arr = np.array(v, dtype=dtype)
    if arr.shape != (4,):
        raise ValueError(f"expected 4 components, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("four-vector components must be finite")
    return arr


def spatial_vector(v):
    """Validate and convert ``v`` to a finite length-3 real array."""
    arr = np.array(v, dtype=float)
    if arr.shape != (3,):
        raise ValueError(f"expected 3 components, got shape {arr.shape}")
    if not np.all(np.isfinite(arr)):
        raise ValueError("spatial vector components must be finite")
    return arr


def embed(a):
    """Spatial vector -> four-vector with zero time component."""
    return np.concatenate(([0.0], spatial_vector(a)))


def inner(v, w):
    """Lorentz inner product ``-v_t w_t + v_x w_x + v_y w_y + v_z w_z``."""
    v = np.asarray(v)
    w = np.asarray(w)
    return -v[..., 0] * w[..., 0] + np.sum(v[..., 1:] * w[..., 1:], axis=-1)


def complex_inner(v, w):
    """Complex-bilinear (not Hermitian) extension of :func:`inner`.

    No conjugation is applied, so ``complex_inner(1j*v, w) == 1j*complex_inner(v, w)``.
    """
    v = np.asarray(v, dtype=complex)
    w = np.asarray(w, dtype=complex)
    return -v[..., 0] * w[..., 0] + np.sum(v[..., 1:] * w[..., 1:], axis=-1)


def classify(v, tol=None):
    """Causal character of ``v``.

    The null band is relative: ``|<v,v>| <= tol * |v|^2`` with ``|v|`` the
    Euclidean norm of the components.
    """
    if tol is None:
        tol = default_tol()
    if not tol > 0:
        raise ValueError("tol must be positive")
    v = four_vector(v)
    if float(np.max(np.abs(v))) <= tol:
        return CausalClass.ZERO
    norm2 = float(v @ v)
    q = float(inner(v, v))
    if abs(q) <= tol * norm2:
        return CausalClass.NULL
    return CausalClass.TIMELIKE if q < 0 else CausalClass.SPACELIKE


def classify_complex_null(a, b, tol=None):
    """Decide whether ``a + ib`` is a complex null vector.

    ``a + ib`` is null iff ``<a,a> = <b,b>`` and ``<a,b> = 0``.  A null pair is
    either two linearly dependent real null vectors, or two spacelike vectors
    of equal length that are orthogonal.
    """
    if tol is None:
        tol = default_tol()
    if not tol > 0:
        raise ValueError("tol must be positive")
    a = four_vector(a)
    b = four_vector(b)
    scale = float(a @ a + b @ b)
    if scale == 0.0:
        return ComplexNullClass.DEPENDENT_NULL
    aa, bb, ab = inner(a, a), inner(b, b), inner(a, b)
    if abs(aa - bb) > tol * scale or abs(ab) > tol * scale:
        return ComplexNullClass.NOT_NULL
    if abs(aa) <= tol * scale:
        return ComplexNullClass.DEPENDENT_NULL
    return ComplexNullClass.SPACELIKE_ORTHONORMAL_PAIR


def rest_dot(a, b):
    """Dot product in the rest space of ``e0``."""
    return float(np.dot(spatial_vector(a), spatial_vector(b)))


def rest_cross(a, b):
    """Right-handed cross product in the rest space of ``e0``."""
    return np.cross(spatial_vector(a), spatial_vector(b))


def complex_dot(a, b):
    """Bilinear dot product of complex 3-vectors (no conjugation)."""
    return complex(np.sum(np.asarray(a, dtype=complex) * np.asarray(b, dtype=complex)))


def cross_matrix(b):
    """Matrix of ``v -> v x b`` acting on column 3-vectors.

    Works for real or complex ``b``.
    """
    b = np.asarray(b)
    m = np.zeros((3, 3), dtype=b.dtype)
    m[0, 1], m[0, 2] = b[2], -b[1]
    m[1, 0], m[1, 2] = -b[2], b[0]
    m[2, 0], m[2, 1] = b[1], -b[0]
    return m


def is_metric_skew(m, atol=1e-12):
    """``<Mv, w> = -<v, Mw>`` for all v, w, i.e. ``G M`` is antisymmetric."""
    gm = METRIC @ m
    scale = max(1.0, float(np.max(np.abs(m))))
    return bool(np.max(np.abs(gm + gm.T)) <= atol * scale)


def is_metric_symmetric(m, atol=1e-12):
    gm = METRIC @ m
    scale = max(1.0, float(np.max(np.abs(m))))
    return bool(np.max(np.abs(gm - gm.T)) <= atol * scale)
