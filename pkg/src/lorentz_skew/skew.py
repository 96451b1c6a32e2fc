"""Metric-skew-symmetric operators and their complexification.

A :class:`SkewField` is the operator form of an electromagnetic field tensor.
It is stored as the pair ``(E, B)`` seen by the standard observer ``u = e0``;
the 4x4 matrix acting on column vectors ``(t, x, y, z)`` is::

    F = [[0, E^T],
         [E, xB ]]      with (xB) v = v x B

The Hodge dual is ``F* = [[0, -B^T], [-B, xE]]`` and the complexification is
``cF = F - i F*``.

Orientation
-----------
Every field carries an ``orientation`` flag, ``+1`` for the default volume
form and ``-1`` for its opposite.  The stored ``E`` and ``B`` are always the
fields relative to the field's own orientation, so all the ``(E, B)``
formulas (dual, rotation, complexification) read the same in either case.
Flipping the orientation negates ``B`` for the same operator, and turns ``c``
into ``c-bar`` when viewed from the default orientation.
"""

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .errors import OrientationMismatch
from .minkowski import complex_dot, cross_matrix, spatial_vector

_ASSERT_TOL = 1e-9


def _frozen(a):
    a = np.array(a)
    a.setflags(write=False)
    return a


def block_matrix(E, C):
    """``[[0, E^T], [E, xC]]`` for real or complex 3-vectors."""
    E = np.asarray(E)
    C = np.asarray(C)
    dtype = np.result_type(E, C, float)
    m = np.zeros((4, 4), dtype=dtype)
    m[0, 1:] = E
    m[1:, 0] = E
    m[1:, 1:] = cross_matrix(C.astype(dtype))
    return m


def split_block(m):
    """Inverse of :func:`block_matrix`: return ``(E, C)`` read off ``m``.

    ``E`` comes from the first column and ``C`` from the spatial block; the
    block is assumed to be of the form ``xC``.
    """
    m = np.asarray(m)
    E = m[1:, 0].copy()
    C = np.array([m[2, 3], m[3, 1], m[1, 2]])
    return E, C


@dataclass(frozen=True, eq=False)
class SkewField:
    """Metric-skew operator given by its electric and magnetic fields."""

    E: np.ndarray
    B: np.ndarray
    orientation: int = 1

    def __post_init__(self):
        object.__setattr__(self, "E", _frozen(spatial_vector(self.E)))
        object.__setattr__(self, "B", _frozen(spatial_vector(self.B)))
        if self.orientation not in (1, -1):
            raise ValueError("orientation must be +1 or -1")

    @cached_property
    def matrix(self):
        m = block_matrix(self.E, self.orientation * self.B)
        m.setflags(write=False)
        return m

    @property
    def E2(self):
        return float(self.E @ self.E)

    @property
    def B2(self):
        return float(self.B @ self.B)

    @property
    def EdotB(self):
        return float(self.E @ self.B)

    @property
    def energy(self):
        """``(E^2 + B^2) / 2``."""
        return 0.5 * (self.E2 + self.B2)

    def is_zero(self):
        return not (np.any(self.E) or np.any(self.B))

    def __neg__(self):
        return SkewField(-self.E, -self.B, self.orientation)

    def __add__(self, other):
        if not isinstance(other, SkewField):
            return NotImplemented
        _check_orientation(self, other)
        return SkewField(self.E + other.E, self.B + other.B, self.orientation)

    def __sub__(self, other):
        if not isinstance(other, SkewField):
            return NotImplemented
        return self + (-other)

    def __mul__(self, k):
        if isinstance(k, (int, float, np.floating, np.integer)):
            return SkewField(k * self.E, k * self.B, self.orientation)
        return NotImplemented

    __rmul__ = __mul__

    def allclose(self, other, rtol=1e-9, atol=0.0):
        """Field-wise closeness relative to the larger field magnitude."""
        if self.orientation != other.orientation:
            return False
        scale = max(np.max(np.abs(self.matrix)), np.max(np.abs(other.matrix)), 1e-300)
        diff = max(np.max(np.abs(self.E - other.E)), np.max(np.abs(self.B - other.B)))
        return bool(diff <= rtol * scale + atol)

    def to_dict(self, include_matrix=False):
        d = {"E": self.E.tolist(), "B": self.B.tolist()}
        if self.orientation != 1:
            d["orientation"] = self.orientation
        if include_matrix:
            d["matrix"] = self.matrix.tolist()
        return d

    @classmethod
    def from_dict(cls, d):
        return cls(d["E"], d["B"], int(d.get("orientation", 1)))

    def __repr__(self):
        o = "" if self.orientation == 1 else ", orientation=-1"
        return f"SkewField(E={self.E.tolist()}, B={self.B.tolist()}{o})"


def _check_orientation(*fields):
    if len({f.orientation for f in fields}) > 1:
        raise OrientationMismatch("fields carry different orientations")


def from_fields(E, B, orientation=1):
    """The unique skew operator with ``Fu = E`` and ``-F*u = B`` for ``u = e0``."""
    return SkewField(E, B, orientation)


def from_matrix(m, orientation=1, check=True):
    """Build a :class:`SkewField` from its 4x4 real matrix."""
    m = np.asarray(m, dtype=float)
    if m.shape != (4, 4):
        raise ValueError("expected a 4x4 matrix")
    E, C = split_block(m)
    F = SkewField(E, orientation * C, orientation)
    if check:
        scale = max(1.0, float(np.max(np.abs(m))))
        if np.max(np.abs(F.matrix - m)) > _ASSERT_TOL * scale:
            raise ValueError("matrix is not metric-skew-symmetric")
    return F


def extract_fields(F):
    """``(E, B)`` relative to the standard observer, as copies."""
    return F.E.copy(), F.B.copy()


def hodge_dual(F):
    """``F*``: ``E* = -B`` and ``B* = E``; applying it twice gives ``-F``."""
    return SkewField(-F.B, F.E, F.orientation)


def duality_rotate(F, theta):
    """``cos(theta) F + sin(theta) F*``."""
    c, s = np.cos(theta), np.sin(theta)
    return SkewField(c * F.E - s * F.B, c * F.B + s * F.E, F.orientation)


def commutator(F, G):
    """``[F, G] = FG - GF``, again a skew operator."""
    _check_orientation(F, G)
    return from_matrix(F.matrix @ G.matrix - G.matrix @ F.matrix, F.orientation, check=False)


@dataclass(frozen=True, eq=False)
class ComplexSkewOp:
    """``alpha I + cF`` (or ``alpha I + c-bar F``) as a complex 4x4 operator.

    ``A`` is the complex field vector ``(cF) u``; for ``cF`` it is ``E + iB``
    and for ``c-bar F`` it is ``E - iB``.
    """

    A: np.ndarray
    alpha: complex = 0j
    conjugate: bool = False
    orientation: int = 1

    def __post_init__(self):
        A = np.array(self.A, dtype=complex)
        if A.shape != (3,):
            raise ValueError("A must be a complex 3-vector")
        object.__setattr__(self, "A", _frozen(A))
        object.__setattr__(self, "alpha", complex(self.alpha))

    @property
    def twist(self):
        """Sign ``k`` in the spatial block ``x(k i A)`` of the default-orientation matrix."""
        bar = self.conjugate != (self.orientation == -1)
        return 1 if bar else -1

    @cached_property
    def pure_matrix(self):
        m = block_matrix(self.A, self.twist * 1j * self.A)
        m.setflags(write=False)
        return m

    @cached_property
    def matrix(self):
        m = self.pure_matrix + self.alpha * np.eye(4)
        m.setflags(write=False)
        return m

    @property
    def square_scalar(self):
        """``A . A``; the pure part squares to this multiple of the identity."""
        return complex_dot(self.A, self.A)

    @property
    def eigenvalue(self):
        """Principal square root of ``A . A``; the pure-part eigenvalues are +/- this."""
        return complex(np.sqrt(self.square_scalar))

    def __matmul__(self, other):
        if isinstance(other, ComplexSkewOp):
            return self.matrix @ other.matrix
        return self.matrix @ np.asarray(other)

    def __repr__(self):
        bar = "cbar" if self.conjugate else "c"
        return f"ComplexSkewOp({bar}, A={self.A.tolist()}, alpha={self.alpha})"


def complexify(F, conjugate=False, alpha=0j):
    """``cF = F - iF*`` (or ``c-bar F = F + iF*`` with ``conjugate=True``)."""
    sign = 1 if conjugate else -1
    A = F.E - sign * 1j * F.B
    op = ComplexSkewOp(A, alpha, conjugate, F.orientation)
    direct = F.matrix + sign * 1j * hodge_dual(F).matrix
    scale = max(1.0, float(np.max(np.abs(direct))))
    assert np.max(np.abs(op.pure_matrix - direct)) <= _ASSERT_TOL * scale, (
        "complexified matrix disagrees with its field vector"
    )
    return op


def pauli_basis(conjugate=False):
    """``(sigma_x, sigma_y, sigma_z)``: complexified unit electric fields.

    With ``conjugate=True`` returns the ``c-bar`` images instead.
    """
    eye = np.eye(3)
    return tuple(complexify(SkewField(eye[k], np.zeros(3)), conjugate) for k in range(3))


def _as_matrix(g):
    if isinstance(g, ComplexSkewOp):
        return np.asarray(g.matrix)
    if isinstance(g, SkewField):
        return np.asarray(g.matrix, dtype=complex)
    m = np.asarray(g, dtype=complex)
    if m.shape != (4, 4):
        raise ValueError("generators must be 4x4")
    return m


def algebra_span_dim(generators, max_word_length, rank_tol=1e-8):
    """Complex dimension of the span of all words of length <= ``max_word_length``.

    The identity (empty word) is included.  The rank is the numeric rank of
    the Gram matrix of the flattened products, with singular values below
    ``rank_tol`` times the largest discarded.
    """
    gens = [_as_matrix(g) for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    if max_word_length < 1:
        raise ValueError("max_word_length must be >= 1")
    words = [np.eye(4, dtype=complex)]
    layer = [np.eye(4, dtype=complex)]
    for _ in range(max_word_length):
        layer = [w @ g for w, g in itertools.product(layer, gens)]
        words.extend(layer)
    flat = np.array([w.ravel() for w in words])
    gram = flat.conj() @ flat.T
    sv = np.linalg.svd(gram, compute_uv=False)
    if sv[0] == 0:
        return 0
    return int(np.sum(sv > rank_tol * sv[0]))


def complex_block(A, C):
    """``[[0, A^T], [A, xC]]`` for complex ``A`` and ``C``."""
    return block_matrix(np.asarray(A, dtype=complex), np.asarray(C, dtype=complex))


def squares_to_scalar(A, C, rtol=1e-9):
    """Whether ``[[0, A^T], [A, xC]]`` squares to ``k I``; returns ``(flag, k)``.

    This holds exactly when ``C = +-iA``, and then ``k = A.A``.
    """
    m = complex_block(A, C)
    sq = m @ m
    k = complex(sq[0, 0])
    scale = max(float(np.max(np.abs(m))) ** 2, 1e-300)
    return bool(np.max(np.abs(sq - k * np.eye(4))) <= rtol * scale), k
