"""Seeded randomized battery of the algebraic identities.

Shared by the ``verify`` CLI subcommand and the test-suite.  Each identity is
checked on every random case and its largest relative residual recorded;
an identity passes when that residual stays within its tolerance.
"""

from dataclasses import dataclass, field

import numpy as np

from . import eigen
from .energy import energy_momentum, lambda_T
from .lorentz import exp_map, transform_fields
from .minkowski import E0, METRIC, inner
from .skew import (
    SkewField,
    commutator,
    complex_dot,
    complexify,
    duality_rotate,
    hodge_dual,
    squares_to_scalar,
)

DEFAULT_TOL = 1e-9
THETA_GRID = np.linspace(0.0, 2 * np.pi, 16, endpoint=False)
# the converse block-operator check and the boosts use fewer cases
CONVERSE_CASES = 100
EXP_NORM = 2.0
SERIES_TERMS = 20


@dataclass
class IdentityResult:
    name: str
    tol: float
    max_residual: float = 0.0
    cases: int = 0

    @property
    def passed(self):
        return bool(self.max_residual <= self.tol)

    def record(self, residual):
        self.max_residual = max(self.max_residual, float(residual))
        self.cases += 1

    def to_dict(self):
        return {
            "identity": self.name,
            "max_residual": self.max_residual,
            "tol": self.tol,
            "cases": self.cases,
            "passed": self.passed,
        }


@dataclass
class BatteryReport:
    seed: int
    cases: int
    results: list = field(default_factory=list)

    @property
    def passed(self):
        return all(r.passed for r in self.results)

    @property
    def max_residual(self):
        return max(r.max_residual for r in self.results if r.tol > 0)

    def __getitem__(self, name):
        for r in self.results:
            if r.name == name:
                return r
        raise KeyError(name)

    def to_dict(self):
        return {
            "seed": self.seed,
            "cases": self.cases,
            "passed": self.passed,
            "identities": [r.to_dict() for r in self.results],
        }


def series_exp(m, terms=SERIES_TERMS):
    """Truncated power series ``sum_{k < terms} m^k / k!``."""
    out = np.eye(m.shape[0], dtype=m.dtype)
    term = out.copy()
    for k in range(1, terms):
        term = term @ m / k
        out = out + term
    return out


def _rel(diff, scale):
    return float(np.max(np.abs(diff))) / scale


def _random_field(rng, low, high):
    return SkewField(rng.uniform(low, high, 3), rng.uniform(low, high, 3))


def _bounded_vector(rng, bound):
    d = rng.normal(size=3)
    return d / np.linalg.norm(d) * rng.uniform(0.0, bound)


def _random_velocity(rng, bound=0.95):
    return _bounded_vector(rng, bound)


def _match_spectrum(found, expected):
    """Largest distance from each expected eigenvalue to the nearest found one, and back."""
    d = np.abs(np.subtract.outer(found, expected))
    return max(d.min(axis=0).max(), d.min(axis=1).max())


class _Battery:
    def __init__(self, tol):
        self.tol = tol
        self.results = {}

    def __call__(self, name, residual, tol=None):
        if name not in self.results:
            self.results[name] = IdentityResult(name, self.tol if tol is None else tol)
        self.results[name].record(residual)


def _check_pair(check, F, G, n):
    """Identities involving a second, independent field ``G``."""
    nG = G.E2 + G.B2
    pair = np.sqrt(n * nG)
    C = commutator(F, G)
    E_c = -np.cross(F.E, G.B) - np.cross(F.B, G.E)
    B_c = np.cross(F.E, G.E) - np.cross(F.B, G.B)
    check(
        "commutator fields: E = -E1 x B2 - B1 x E2, B = E1 x E2 - B1 x B2",
        max(_rel(C.E - E_c, pair), _rel(C.B - B_c, pair)),
    )
    lhs = hodge_dual(C).matrix
    check(
        "[F1, F2]* = [F1, F2*] = [F1*, F2]",
        max(
            _rel(lhs - commutator(F, hodge_dual(G)).matrix, pair),
            _rel(lhs - commutator(hodge_dual(F), G).matrix, pair),
        ),
    )
    cF, cG = complexify(F).matrix, complexify(G).matrix
    check("[cF, cG] = 2 c[F, G]", _rel(cF @ cG - cG @ cF - 2 * complexify(C).matrix, pair))
    AF, AG = complexify(F).A, complexify(G).A
    check(
        "cF cG + cG cF = 2 (A_F . A_G) I",
        _rel(cF @ cG + cG @ cF - 2 * complex_dot(AF, AG) * np.eye(4), pair),
    )
    cbarG = complexify(G, conjugate=True).matrix
    check("cF cbarG = cbarG cF", _rel(cF @ cbarG - cbarG @ cF, pair))


def _check_converse(check, rng, low, high):
    A = rng.uniform(low, high, 3) + 1j * rng.uniform(low, high, 3)
    scale = float(np.max(np.abs(A))) ** 2
    for sign in (1, -1):
        ok, k = squares_to_scalar(A, sign * 1j * A)
        check(
            "block operator with C = +-iA squares to (A.A) I",
            max(abs(k - complex_dot(A, A)) / scale, 0.0 if ok else np.inf),
        )
    delta = 0.1 * np.linalg.norm(A) * (rng.normal(size=3) + 1j * rng.normal(size=3))
    ok, _ = squares_to_scalar(A, 1j * A + delta)
    # counted as failures: a perturbed C wrongly accepted
    check("block operator with C != +-iA does not square to a scalar", float(ok), tol=0.0)


def _check_single(check, F, rng):
    n = F.E2 + F.B2
    m = F.matrix
    Fs = hodge_dual(F).matrix
    eye = np.eye(4)
    EB, E2mB2 = F.EdotB, F.E2 - F.B2
    check(
        "F F* = F* F = -(E.B) I",
        max(_rel(m @ Fs + EB * eye, n), _rel(Fs @ m + EB * eye, n)),
    )
    v = rng.normal(size=4)
    check(
        "<Fv, F*v> = (E.B) <v, v>",
        abs(inner(m @ v, Fs @ v) - EB * inner(v, v)) / (n * float(v @ v)),
    )
    ev = eigen.eigenvalues(F)
    check("lambda_F lambda_F* = -E.B", abs(ev.lambda_F * ev.lambda_Fstar + EB) / n)
    check("F^2 - F*^2 = (E^2 - B^2) I", _rel(m @ m - Fs @ Fs - E2mB2 * eye, n))
    check(
        "lambda_F^2 - lambda_F*^2 = E^2 - B^2",
        abs(ev.lambda_F**2 - ev.lambda_Fstar**2 - E2mB2) / n,
    )
    check("tr(F^2) = 2 (E^2 - B^2)", abs(np.trace(m @ m) - 2 * E2mB2) / n)

    w = _random_velocity(rng)
    res = transform_fields(F, w)
    g2 = 1.0 / (1.0 - float(w @ w))
    EBp, E2mB2p = res.invariants()
    check("E.B is the same for a boosted observer", abs(EBp - EB) / (n * g2))
    check("E^2 - B^2 is the same for a boosted observer", abs(E2mB2p - E2mB2) / (n * g2))

    cF = complexify(F)
    check("(cF)^2 = (A.A) I", _rel(cF.matrix @ cF.matrix - cF.square_scalar * eye, n))
    T = energy_momentum(F).matrix
    cbarF = complexify(F, conjugate=True).matrix
    check("cF cbarF = 2 T", _rel(cF.matrix @ cbarF - 2 * T, n))
    check(
        "T e0 = (E^2 + B^2)/2 e0 + E x B",
        _rel(T @ E0 - np.concatenate(([F.energy], np.cross(F.E, F.B))), n),
    )
    check(
        "T is unchanged by duality rotation (16 angles)",
        max(_rel(energy_momentum(duality_rotate(F, th)).matrix - T, n) for th in THETA_GRID),
    )
    lam_T = lambda_T(F)
    check("T^2 = lambda_T^2 I", _rel(T @ T - lam_T**2 * eye, n * n))
    check(
        "lambda_T is the largest |eigenvalue| of T",
        abs(np.max(np.abs(np.linalg.eigvals(T))) - lam_T) / n,
    )

    found, vecs = np.linalg.eig(m)
    expected = np.array([ev.lambda_F, -ev.lambda_F, 1j * ev.lambda_Fstar, -1j * ev.lambda_Fstar])
    check(
        "eigenvalues of F are +-lambda_F and +-i lambda_F*",
        _match_spectrum(found, expected) / np.sqrt(n),
    )
    check(
        "characteristic polynomial is x^4 - (E^2 - B^2) x^2 - (E.B)^2",
        _rel(np.poly(m).real - eigen.char_poly(F), n * n),
    )
    k = int(np.argmax(found.real))
    s_num = vecs[:, k].real / np.linalg.norm(vecs[:, k].real)
    check(
        "real eigenvectors s satisfy lambda <s, s> = 0",
        abs(found[k].real * inner(s_num, s_num)) / np.sqrt(n),
    )

    pair = eigen.principal_null_pair(F)
    resid = 0.0
    for s, lam in ((pair.s, ev.lambda_F), (pair.s_minus, -ev.lambda_F)):
        s2 = float(s @ s)
        resid = max(
            resid,
            _rel(m @ s - lam * s, np.sqrt(n * s2)),
            abs(inner(s, s)) / s2,
        )
    check("s and s_- are null eigenvectors for +-lambda_F", resid)


def _check_exp(check, rng):
    F = SkewField(_bounded_vector(rng, EXP_NORM), _bounded_vector(rng, EXP_NORM))
    ex = exp_map(F)
    scale = max(1.0, float(np.max(np.abs(ex))))
    check(
        "closed-form e^F matches the 20-term power series",
        _rel(ex - series_exp(F.matrix), scale),
        tol=1e-10,
    )
    check("e^F is metric-orthogonal", _rel(ex.T @ METRIC @ ex - METRIC, scale**2), tol=1e-8)


def run_battery(seed=42, cases=1000, low=-10.0, high=10.0, tol=DEFAULT_TOL):
    """Run every identity on ``cases`` random fields drawn from ``seed``."""
    if int(cases) != cases or cases < 1:
        raise ValueError("cases must be a positive integer")
    rng = np.random.default_rng(seed)
    check = _Battery(tol)
    for i in range(int(cases)):
        F = _random_field(rng, low, high)
        G = _random_field(rng, low, high)
        _check_single(check, F, rng)
        _check_pair(check, F, G, F.E2 + F.B2)
        if i < CONVERSE_CASES:
            _check_converse(check, rng, low, high)
        _check_exp(check, rng)
    return BatteryReport(int(seed), int(cases), list(check.results.values()))
