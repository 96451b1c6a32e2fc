"""Energy-momentum operator ``T_F``, its invariant planes, and inverses.

``T_F = (F^2 + F*^2) / 2 = F^2 - tr(F^2)/4 I`` is metric-symmetric and
traceless, and squares to ``lambda_T^2 I``.  No physical normalisation
constant is applied.
"""

from dataclasses import dataclass

import numpy as np

from .errors import InvalidTensor, NullField
from .minkowski import E0, inner, is_metric_symmetric
from .skew import SkewField, duality_rotate, from_matrix


@dataclass(frozen=True, eq=False)
class EnergyMomentum:
    matrix: np.ndarray
    lambda_T: float

    def to_dict(self):
        return {"matrix": np.asarray(self.matrix).tolist(), "lambda_T": float(self.lambda_T)}

    @classmethod
    def from_dict(cls, d):
        m = np.array(d["matrix"], dtype=float)
        lam = d.get("lambda_T")
        if lam is None:
            lam = _lambda_from_matrix(m)
        return cls(m, float(lam))


@dataclass(frozen=True, eq=False)
class InvariantPlanes:
    """Orthonormal bases (rows) of the two eigenplanes of ``T``.

    ``pi_plus[0]`` is a unit timelike vector and ``pi_plus[1]`` a unit
    spacelike one; both rows of ``pi_minus`` are unit spacelike.
    """

    pi_plus: np.ndarray
    pi_minus: np.ndarray
    lambda_T: float


def lambda_T(F):
    """``sqrt(((E^2 - B^2)/2)^2 + (E.B)^2)``, the nonnegative eigenvalue of ``T``."""
    return float(np.hypot(0.5 * (F.E2 - F.B2), F.EdotB))


def energy_momentum(F):
    f2 = F.matrix @ F.matrix
    T = f2 - 0.25 * np.trace(f2) * np.eye(4)
    return EnergyMomentum(T, lambda_T(F))


def poynting(F):
    """``T e0 = (E^2+B^2)/2 e0 + E x B``."""
    return energy_momentum(F).matrix @ E0


def _is_null(F, tol):
    if tol is None:
        tol = 1e-8 * (F.E2 + F.B2)
    return lambda_T(F) <= tol


def _orthonormalize(columns, seed=None, drop=1e-8):
    """Pivoted modified Gram-Schmidt under the Lorentz inner product.

    ``seed`` (if given) is taken first.  Remaining candidates are chosen by
    largest Euclidean residual norm; candidates below ``drop`` times the
    largest column norm are discarded.  The candidates are assumed to span a
    non-degenerate subspace once the seed is removed.
    """
    cols = [np.asarray(c, dtype=float) for c in columns]
    ref = max(np.linalg.norm(c) for c in cols)
    basis = []

    def project_out(v):
        for b in basis:
            v = v - inner(v, b) / inner(b, b) * b
        return v

    def normalize(v):
        return v / np.sqrt(abs(inner(v, v)))

    if seed is not None:
        basis.append(normalize(np.asarray(seed, dtype=float)))
    while True:
        residuals = [project_out(c) for c in cols]
        norms = [np.linalg.norm(r) for r in residuals]
        k = int(np.argmax(norms))
        if norms[k] <= drop * ref:
            break
        basis.append(normalize(residuals[k]))
        cols.pop(k)
        if not cols:
            break
    return np.array(basis)


def invariant_planes(F, tol=None):
    """Eigenplanes of ``T`` for ``+lambda_T`` (timelike) and ``-lambda_T`` (spacelike).

    Raises :class:`NullField` when ``lambda_T`` is below ``tol``
    (default ``1e-8 (E^2 + B^2)``); the planes degenerate there.
    """
    if _is_null(F, tol):
        raise NullField("invariant planes are undefined for a null field")
    em = energy_momentum(F)
    lam = em.lambda_T
    phi_plus = lam * np.eye(4) + em.matrix
    phi_minus = -lam * np.eye(4) + em.matrix
    plus = _orthonormalize(phi_plus.T, seed=phi_plus @ E0)
    minus = _orthonormalize(phi_minus.T)
    if plus.shape[0] != 2 or minus.shape[0] != 2:
        raise NullField("eigenplanes did not come out two-dimensional")
    return InvariantPlanes(plus, minus, lam)


def _lambda_from_matrix(Q):
    lam2 = float(np.trace(Q @ Q)) / 4.0
    return float(np.sqrt(max(lam2, 0.0)))


def check_tensor(Q, tol=1e-8):
    """Raise :class:`InvalidTensor` unless ``Q`` can be an energy-momentum operator.

    Checks metric symmetry, zero trace, ``Q^2 = lambda^2 I`` and
    ``<e0, Q e0> < 0``, all relative to the largest entry of ``Q``.
    Returns ``lambda``.
    """
    Q = np.asarray(Q, dtype=float)
    if Q.shape != (4, 4) or not np.all(np.isfinite(Q)):
        raise InvalidTensor("expected a finite 4x4 matrix")
    scale = float(np.max(np.abs(Q)))
    if scale == 0.0:
        raise InvalidTensor("<u, Qu> must be negative; Q is zero")
    if not is_metric_symmetric(Q, atol=tol):
        raise InvalidTensor("Q is not metric-symmetric")
    if abs(np.trace(Q)) > tol * scale:
        raise InvalidTensor("Q is not traceless")
    lam = _lambda_from_matrix(Q)
    if np.max(np.abs(Q @ Q - lam**2 * np.eye(4))) > tol * scale**2:
        raise InvalidTensor("Q^2 is not a multiple of the identity")
    if not inner(E0, Q @ E0) < 0:
        raise InvalidTensor("<u, Qu> must be negative for the standard observer")
    return lam


def reconstruct_skew(Q, tol=1e-8, null_tol=1e-7):
    """A skew operator ``F`` with ``T_F = Q``.

    ``Q`` may be an :class:`EnergyMomentum` or a raw 4x4 matrix.  The answer
    is unique only up to duality rotation; the non-null branch returns the
    representative with ``lambda_F* = 0``.
    """
    Q = np.asarray(Q.matrix if isinstance(Q, EnergyMomentum) else Q, dtype=float)
    lam = check_tensor(Q, tol)
    energy = -inner(E0, Q @ E0)
    if lam <= null_tol * energy:
        return _reconstruct_null(Q)
    return _reconstruct_nonnull(Q, lam)


def _reconstruct_nonnull(Q, lam):
    phi_plus = lam * np.eye(4) + Q
    phi_minus = -lam * np.eye(4) + Q
    plus = _orthonormalize(phi_plus.T, seed=phi_plus @ E0)
    minus = _orthonormalize(phi_minus.T)
    if plus.shape[0] != 2 or minus.shape[0] != 2:
        raise InvalidTensor("eigenplanes of Q are not two-dimensional")
    t, x = plus
    # the two null lines of the timelike plane
    s_plus, s_minus = t + x, t - x
    lam_F = np.sqrt(2.0 * lam)
    basis = np.column_stack([s_plus, s_minus, minus[0], minus[1]])
    F = basis @ np.diag([lam_F, -lam_F, 0.0, 0.0]) @ np.linalg.inv(basis)
    return from_matrix(F, check=False)


def _reconstruct_null(Q):
    s = Q @ E0
    energy = s[0]
    p = s[1:]
    pn = np.linalg.norm(p)
    if pn == 0.0:
        raise InvalidTensor("null tensor with zero momentum")
    n = p / pn
    helper = np.eye(3)[int(np.argmin(np.abs(n)))]
    e1 = np.cross(n, helper)
    e1 /= np.linalg.norm(e1)
    e2 = np.cross(n, e1)
    # E x B = |E|^2 n, |E| = |B|, and |E|^2 = energy = |p| for a null tensor
    amp = np.sqrt(0.5 * (energy + pn))
    return SkewField(amp * e1, amp * e2)


def duality_orbit_check(F, F2, tol=1e-9):
    """Angle ``theta`` with ``duality_rotate(F, theta) == F2``, or ``None``.

    ``None`` is returned when the energy-momentum operators differ, since
    only fields with the same ``T`` lie on one duality orbit.
    """
    T1 = energy_momentum(F).matrix
    T2 = energy_momentum(F2).matrix
    scale = max(np.max(np.abs(T1)), np.max(np.abs(T2)))
    if scale == 0.0:
        return 0.0
    if np.max(np.abs(T1 - T2)) > tol * scale:
        return None
    # complexification is complex-linear, so E2 + iB2 = e^{i theta} (E + iB)
    A1 = F.E + 1j * F.B
    A2 = F2.E + 1j * F2.B
    theta = float(np.angle(np.vdot(A1, A2))) % (2 * np.pi)
    if not duality_rotate(F, theta).allclose(F2, rtol=tol):
        return None
    return theta
