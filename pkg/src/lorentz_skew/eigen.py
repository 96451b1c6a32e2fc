"""Real and complex eigenstructure of skew operators.

Sign conventions: ``lambda_F >= 0`` always, and ``lambda_F*`` carries the sign
forced by ``lambda_F * lambda_F* = -E.B``.  When ``lambda_F = 0`` and
``E.B = 0`` (magnetically dominated fields) ``lambda_F* >= 0`` is chosen.
``lambda_cF`` is the principal square root of ``A.A``; its sign is genuinely
ambiguous and only the continuation code in :mod:`.topology` tracks it.
"""

from dataclasses import dataclass

import numpy as np
import scipy.linalg

from .energy import lambda_T
from .errors import NotNull, ZeroField
from .minkowski import E0
from .skew import complexify

_EPS = np.finfo(float).eps


@dataclass(frozen=True)
class EigenData:
    lambda_F: float
    lambda_Fstar: float
    lambda_cF: complex
    lambda_T: float

    def to_dict(self):
        return {
            "lambda_F": self.lambda_F,
            "lambda_Fstar": self.lambda_Fstar,
            "lambda_cF": [self.lambda_cF.real, self.lambda_cF.imag],
            "lambda_T": self.lambda_T,
        }


@dataclass(frozen=True, eq=False)
class PrincipalNullPair:
    s: np.ndarray
    s_minus: np.ndarray


def is_null(F, rtol=1e-10):
    """``lambda_T <= rtol (E^2 + B^2 + eps)``."""
    return lambda_T(F) <= rtol * (F.E2 + F.B2 + _EPS)


def psi(F):
    """``(E^2 - B^2) + 2i E.B``, the square of the eigenvalue of ``cF``."""
    return complex(F.E2 - F.B2, 2.0 * F.EdotB)


def eigenvalues(F):
    lam_T = lambda_T(F)
    half = 0.5 * (F.E2 - F.B2)
    dot = F.EdotB
    # pick the larger of lambda_F, |lambda_F*| from the well-conditioned sum,
    # the other from the product |lambda_F lambda_F*| = |E.B|
    if half >= 0:
        lam_F = np.sqrt(lam_T + half)
        mag_star = abs(dot) / lam_F if lam_F > 0 else 0.0
    else:
        mag_star = np.sqrt(lam_T - half)
        lam_F = abs(dot) / mag_star
    lam_star = -np.copysign(mag_star, dot) if dot != 0 else mag_star
    return EigenData(
        lambda_F=float(lam_F),
        lambda_Fstar=float(lam_star),
        lambda_cF=complex(np.sqrt(psi(F))),
        lambda_T=lam_T,
    )


def char_poly(F):
    """Coefficients of ``det(lambda I - F)``, highest degree first.

    ``lambda^4 - (E^2 - B^2) lambda^2 - (E.B)^2``.
    """
    return np.array([1.0, 0.0, -(F.E2 - F.B2), 0.0, -F.EdotB**2])


def principal_null_pair(F):
    """Null eigenvectors ``s`` (for ``lambda_F``) and ``s_-`` (for ``-lambda_F``).

    ``s = 2(lambda_T u + (E^2+B^2)/2 u + E x B + lambda_F E - lambda_F* B)``
    with ``u = e0``; ``s_-`` flips the signs of both eigenvalues.
    """
    if F.is_zero():
        raise ZeroField("the zero operator has no principal null directions")
    ev = eigenvalues(F)
    t = 2.0 * (ev.lambda_T + F.energy)
    poy = np.cross(F.E, F.B)
    shift = ev.lambda_F * F.E - ev.lambda_Fstar * F.B
    s = np.concatenate(([t], 2.0 * (poy + shift)))
    s_minus = np.concatenate(([t], 2.0 * (poy - shift)))
    return PrincipalNullPair(s, s_minus)


def null_eigendirection(F, rtol=1e-10):
    """``F^2 e0 = T e0`` for a null field; it spans the image of ``T``."""
    if F.is_zero():
        raise ZeroField("the zero operator has no null direction")
    if not is_null(F, rtol):
        raise NotNull("field is not null; use principal_null_pair")
    return F.matrix @ (F.matrix @ E0)


def _pivoted_span(m, rank, drop=1e-8):
    """Orthonormal (Hermitian) basis of the first ``rank`` pivoted columns of ``m``."""
    q, r, _ = scipy.linalg.qr(m, pivoting=True)
    diag = np.abs(np.diag(r))
    keep = int(np.sum(diag > drop * diag[0])) if diag[0] > 0 else 0
    return q[:, : min(rank, keep)]


def complex_eigenplane(F, sign=1):
    """Two vectors spanning the ``sign * lambda_cF`` eigenspace of ``cF``.

    The basis comes from the image of ``sign * lambda_cF I + cF`` under
    pivoted QR; it is orthonormal in the Hermitian sense (the plane is totally
    null, so the bilinear form cannot orthonormalise it).
    """
    if F.is_zero():
        raise ZeroField("the zero operator has a 4-dimensional kernel")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    cF = complexify(F).matrix
    lam = 0j if is_null(F) else eigenvalues(F).lambda_cF
    phi = sign * lam * np.eye(4) + cF
    basis = _pivoted_span(phi, 2)
    return tuple(basis[:, k] for k in range(basis.shape[1]))


def psi_map(F, alpha, v):
    """``(alpha I + cF) v``."""
    return complexify(F, alpha=alpha).matrix @ np.asarray(v, dtype=complex)


def psi_v_determinant(F, alpha, v=None):
    """``det(alpha I + cF)``, which equals ``(alpha^2 - lambda_cF^2)^2``.

    ``v`` is accepted to mirror :func:`psi_map`; the determinant does not
    depend on it.  When it is nonzero no vector at all, null or not, lies in
    the kernel of ``alpha I + cF``.
    """
    return complex(np.linalg.det(complexify(F, alpha=alpha).matrix))


def frame_from_planes(planes):
    """Orthonormal eigenframe of ``T`` assembled from its invariant planes."""
    return np.vstack([planes.pi_plus, planes.pi_minus])

