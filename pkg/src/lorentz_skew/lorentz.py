"""Observer changes, field transformation, Doppler factors and ``e^F``.

Boosts are described by the 3-velocity ``w`` of the new observer
``u' = (u + w) / sqrt(1 - w^2)`` relative to ``u = e0``.  Transformed fields
are returned as four-vectors living in the rest space of ``u'``; no primed
coordinate frame is constructed.
"""

from dataclasses import dataclass

import numpy as np

from . import eigen
from .energy import lambda_T
from .errors import NotNull, NullField, SuperluminalVelocity, ZeroField, ZeroVelocity
from .minkowski import E0, four_vector, inner, spatial_vector
from .skew import complexify

_SERIES_CUTOFF = 1e-4


def check_velocity(w):
    """Validate a relative velocity; returns it as an array."""
    w = spatial_vector(w)
    if not float(w @ w) < 1.0:
        raise SuperluminalVelocity(f"|w| = {np.linalg.norm(w):.17g} is not below 1")
    return w


def gamma(w):
    w = check_velocity(w)
    return 1.0 / np.sqrt(1.0 - float(w @ w))


def boost_observer(w):
    """``u' = (u + w) / sqrt(1 - w^2)``."""
    w = check_velocity(w)
    return gamma(w) * np.concatenate(([1.0], w))


@dataclass(frozen=True, eq=False)
class FieldTransformResult:
    E_prime: np.ndarray
    B_prime: np.ndarray
    observer: np.ndarray

    def invariants(self):
        """``(E'.B', E'^2 - B'^2)`` with the full Lorentz inner product."""
        e, b = self.E_prime, self.B_prime
        return float(inner(e, b)), float(inner(e, e) - inner(b, b))


def transform_fields(F, w):
    """Fields seen by the observer moving with velocity ``w``.

    ``E' = F u'`` and ``B' = -F* u'``, i.e.::

        E' = [(E.w) u + E + w x B] / sqrt(1 - w^2)
        B' = [(B.w) u + B - w x E] / sqrt(1 - w^2)
    """
    w = check_velocity(w)
    g = gamma(w)
    E, B = F.E, F.B
    if F.orientation == -1:
        # the operator's default-orientation magnetic field flips
        B_op = -B
        E_prime = g * np.concatenate(([E @ w], E + np.cross(w, B_op)))
        B_prime = -g * np.concatenate(([B_op @ w], B_op - np.cross(w, E)))
    else:
        E_prime = g * np.concatenate(([E @ w], E + np.cross(w, B)))
        B_prime = g * np.concatenate(([B @ w], B - np.cross(w, E)))
    return FieldTransformResult(E_prime, B_prime, boost_observer(w))


def par_perp_decompose(v, w):
    """Split ``v`` into its part in the ``(u, w)`` plane and the rest.

    The parallel part is the Lorentz-orthogonal projection onto
    ``span(e0, w)`` and the perpendicular part is orthogonal to both.  For a
    transformed field (``v`` orthogonal to ``u'``) the parallel part is a
    multiple of ``u + w/w^2``; any other ``v`` gets the same raw projection.
    """
    v = four_vector(v)
    w = spatial_vector(w)
    wn = np.linalg.norm(w)
    if wn == 0.0:
        raise ZeroVelocity("the (u, w) plane is undefined for w = 0")
    w_hat = np.concatenate(([0.0], w / wn))
    parallel = -inner(v, E0) * E0 + inner(v, w_hat) * w_hat
    return parallel, v - parallel


def vector_length(v):
    """``sqrt(|<v, v>|)``."""
    return float(np.sqrt(abs(inner(v, v))))


def eigenvector_scale_factor(F, w, method="closed_form"):
    """Multiple relating the principal eigenvector seen by ``u'`` to that seen by ``u``.

    ``method="closed_form"`` evaluates::

        gamma [1 + (-(E x B).w + lambda_F E.w - lambda_F* B.w) / (lambda_T + (E^2+B^2)/2)]

    ``method="ratio"`` evaluates ``<u', s_-> / <u, s_->`` directly from the
    ``-lambda_F`` eigenvector; it involves no sign conventions.
    """
    if F.is_zero():
        raise ZeroField("the zero operator has no eigenvector")
    w = check_velocity(w)
    if method == "ratio":
        s_minus = eigen.principal_null_pair(F).s_minus
        return float(inner(boost_observer(w), s_minus) / inner(E0, s_minus))
    if method != "closed_form":
        raise ValueError(f"unknown method {method!r}")
    ev = eigen.eigenvalues(F)
    num = -np.cross(F.E, F.B) @ w + ev.lambda_F * (F.E @ w) - ev.lambda_Fstar * (F.B @ w)
    return float(gamma(w) * (1.0 + num / (ev.lambda_T + F.energy)))


def doppler_null(F, w):
    """``gamma (1 - w.(E x B) / E^2)`` for a null field."""
    if F.is_zero():
        raise ZeroField("the zero operator has no eigenvector")
    if not eigen.is_null(F):
        raise NotNull("the Doppler ratio formula applies to null fields only")
    w = check_velocity(w)
    return float(gamma(w) * (1.0 - (w @ np.cross(F.E, F.B)) / F.E2))


def poynting_eliminating_velocity(F):
    """Velocity of an observer who sees ``E' x B' = 0``.

    ``w = (E x B) / (lambda_T + (E^2 + B^2)/2)``; its length is below 1 for
    every non-null field.
    """
    if eigen.is_null(F):
        raise NullField("a null field's Poynting vector is lightlike; no such observer")
    return np.cross(F.E, F.B) / (lambda_T(F) + F.energy)


def lorentz_force(F, q, w):
    """``q F u' = q [(E.w) u + E + w x B] / sqrt(1 - w^2)``."""
    w = check_velocity(w)
    B = F.orientation * F.B
    return q * gamma(w) * np.concatenate(([F.E @ w], F.E + np.cross(w, B)))


def _sinh_over(lam):
    """``sinh(lam/2) / lam`` with a series below the cutoff."""
    if abs(lam) < _SERIES_CUTOFF:
        x2 = lam * lam
        return 0.5 + x2 / 48.0 + x2 * x2 / 3840.0
    return np.sinh(lam / 2) / lam


def exp_complex(F, conjugate=False):
    """``e^{cF} = cosh(lambda) I + sinh(lambda)/lambda cF`` (complex 4x4)."""
    op = complexify(F, conjugate)
    lam = op.eigenvalue
    if abs(lam) < _SERIES_CUTOFF:
        x2 = lam * lam
        k = 1.0 + x2 / 6.0 + x2 * x2 / 120.0
    else:
        k = np.sinh(lam) / lam
    return np.cosh(lam) * np.eye(4) + k * op.pure_matrix


def exp_map(F, imag_tol=1e-9):
    """``e^F`` as a real 4x4 matrix.

    Null fields use ``I + F + F^2/2`` (``F^3 = 0``).  Otherwise ``e^F`` is
    the product of the half-angle exponentials of ``cF`` and ``c-bar F``,
    which commute and sum to ``2F``.
    """
    m = np.asarray(F.matrix)
    if eigen.is_null(F):
        return np.eye(4) + m + 0.5 * (m @ m)
    cF = complexify(F)
    lam = cF.eigenvalue
    half = np.cosh(lam / 2) * np.eye(4) + _sinh_over(lam) * cF.pure_matrix
    # c-bar F is the entrywise conjugate of cF since F is real
    full = half @ half.conj()
    scale = max(1.0, float(np.max(np.abs(full))))
    resid = float(np.max(np.abs(full.imag)))
    if resid > imag_tol * scale:
        raise ArithmeticError(f"exp_map produced imaginary residue {resid:.3g}")
    return full.real
