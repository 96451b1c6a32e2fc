"""Acceptance criteria, each checked at its stated tolerance.

Every test carries a ``criterion`` marker; conftest prints one PASS/FAIL
line per criterion in the terminal summary.
"""

import json
import time
from importlib import resources

import numpy as np
import pytest
import scipy.linalg
from scipy.spatial.transform import Rotation

from lorentz_skew import (
    Parity,
    SkewField,
    algebra_span_dim,
    degree,
    doppler_null,
    duality_orbit_check,
    duality_rotate,
    eigenvalue_continuation,
    eigenvector_scale_factor,
    energy_momentum,
    exp_map,
    is_null,
    lambda_T,
    pauli_basis,
    poynting_eliminating_velocity,
    reconstruct_skew,
    transform_fields,
    winding,
)
from lorentz_skew import errors
from lorentz_skew.battery import run_battery, series_exp
from lorentz_skew.minkowski import METRIC
from lorentz_skew.topology import Circle, config_from_dict, loop_from_dict

SEED = 20241017


def fixture(name):
    path = resources.files("lorentz_skew") / "fixtures" / f"{name}.json"
    return json.loads(path.read_text(encoding="utf-8"))


def random_unit(rng):
    v = rng.normal(size=3)
    return v / np.linalg.norm(v)


def random_null_field(rng, size=1.0):
    """Orthogonal ``E``, ``B`` of equal length; null up to rounding."""
    R = Rotation.random(random_state=rng).as_matrix()
    a = size * rng.uniform(0.1, 1.0)
    return SkewField(a * R[:, 0], a * R[:, 1])


def boost_matrix(w):
    """Pure boost taking ``e0`` to ``(1, w) / sqrt(1 - w^2)``, built from scratch."""
    w = np.asarray(w, float)
    g = 1.0 / np.sqrt(1.0 - w @ w)
    L = np.eye(4)
    L[0, 0] = g
    L[0, 1:] = L[1:, 0] = g * w
    w2 = w @ w
    if w2 > 0:
        L[1:, 1:] += (g - 1.0) * np.outer(w, w) / w2
    return L


@pytest.mark.criterion(1, "free electron: every winding is 0")
def test_free_electron_degree_zero():
    config = config_from_dict(fixture("free_electron"))
    rng = np.random.default_rng(SEED + 1)
    loops = []
    while len(loops) < 5:
        radius = rng.uniform(0.3, 5.0)
        center = rng.uniform(-4, 4, 3)
        normal = random_unit(rng)
        # keep the origin well away from the circle itself
        h = center @ normal
        rho = np.linalg.norm(center - h * normal)
        if np.hypot(h, rho - radius) > 0.1:
            loops.append(Circle(center, normal, radius))
    start = time.perf_counter()
    windings = [winding(config, lp).winding for lp in loops]
    elapsed = time.perf_counter() - start
    assert windings == [0] * 5
    assert elapsed < 1.0


@pytest.mark.criterion(2, "electron in constant B: |winding| = 1, odd, degree 1")
def test_electron_in_constant_b_degree_one():
    config = config_from_dict(fixture("electron_constant_b"))
    loop = loop_from_dict(fixture("linking_loop"))
    assert loop.to_dict()["radius"] == 0.25
    loops = [loop_from_dict(d) for d in fixture("electron_constant_b_loops")["loops"]]
    start = time.perf_counter()
    report = winding(config, loop)
    parity = eigenvalue_continuation(config, loop)
    deg = degree(config, loops)
    elapsed = time.perf_counter() - start
    assert abs(report.winding) == 1
    assert parity is Parity.ODD
    assert deg == 1
    assert elapsed < 1.0


@pytest.mark.criterion(3, "identity battery, 1000 seeded fields")
def test_identity_battery():
    start = time.perf_counter()
    report = run_battery(seed=42, cases=1000, low=-10.0, high=10.0)
    elapsed = time.perf_counter() - start
    failed = [r.to_dict() for r in report.results if not r.passed]
    assert not failed
    assert report.max_residual < 1e-8
    assert report["block operator with C = +-iA squares to (A.A) I"].cases == 200
    assert report["block operator with C != +-iA does not square to a scalar"].cases == 100
    assert elapsed < 10.0


@pytest.mark.criterion(4, "Pauli/Clifford relations and algebra dimension")
def test_pauli_clifford():
    s = [p.matrix for p in pauli_basis()]
    sb = [p.matrix for p in pauli_basis(conjugate=True)]
    eye = np.eye(4)
    worst = 0.0
    for i in range(3):
        worst = max(worst, np.max(np.abs(s[i] @ s[i] - eye)), np.max(np.abs(sb[i] @ sb[i] - eye)))
        for j in range(3):
            if i != j:
                worst = max(worst, np.max(np.abs(s[i] @ s[j] + s[j] @ s[i])))
            worst = max(worst, np.max(np.abs(s[i] @ sb[j] - sb[j] @ s[i])))
    worst = max(worst, np.max(np.abs(s[0] @ s[1] - s[1] @ s[0] - 2j * s[2])))
    assert worst < 1e-10
    assert algebra_span_dim([s[0], s[1], sb[0], sb[1]], 4) == 16


@pytest.mark.criterion(5, "exponential map: series oracle, orthogonality, null shortcut")
def test_exponential_map():
    rng = np.random.default_rng(SEED + 5)
    for _ in range(200):
        E = random_unit(rng) * rng.uniform(0, 2)
        B = random_unit(rng) * rng.uniform(0, 2)
        F = SkewField(E, B)
        ex = exp_map(F)
        scale = max(1.0, np.max(np.abs(ex)))
        assert np.max(np.abs(ex - series_exp(F.matrix, 20))) / scale < 1e-10
        assert np.max(np.abs(ex.T @ METRIC @ ex - METRIC)) / scale**2 < 1e-8
    for _ in range(100):
        F = random_null_field(rng, size=2.0)
        assert is_null(F)
        m = F.matrix
        shortcut = np.eye(4) + m + 0.5 * m @ m
        np.testing.assert_array_equal(exp_map(F), shortcut)
        assert np.max(np.abs(shortcut - scipy.linalg.expm(m))) < 1e-12


@pytest.mark.criterion(6, "boosts: invariants, null Doppler factor, Poynting elimination")
def test_boost_suite():
    rng = np.random.default_rng(SEED + 6)
    for _ in range(500):
        F = SkewField(rng.uniform(-10, 10, 3), rng.uniform(-10, 10, 3))
        w = random_unit(rng) * rng.uniform(0, 0.95)
        res = transform_fields(F, w)
        EB, E2mB2 = res.invariants()
        g2 = 1.0 / (1.0 - w @ w)
        n = F.E2 + F.B2
        assert abs(EB - F.EdotB) / (n * g2) < 1e-8
        assert abs(E2mB2 - (F.E2 - F.B2)) / (n * g2) < 1e-8

    data = fixture("null_field")
    F = SkewField(data["E"], data["B"])
    w = np.array(data["w"])
    assert np.linalg.norm(w) == 0.6
    d = doppler_null(F, w)
    assert abs(d - 0.5) < 1e-12
    assert abs(d - eigenvector_scale_factor(F, w)) < 1e-9
    assert abs(d - eigenvector_scale_factor(F, w, method="ratio")) < 1e-9

    for _ in range(100):
        F = SkewField(rng.uniform(-1, 1, 3), rng.uniform(-1, 1, 3))
        assert not is_null(F)
        w = poynting_eliminating_velocity(F)
        res = transform_fields(F, w)
        # carry the rest-space vectors of u' back to e0 and take ordinary cross products
        back = boost_matrix(-w)
        e, b = back @ res.E_prime, back @ res.B_prime
        assert abs(e[0]) < 1e-12 and abs(b[0]) < 1e-12
        assert np.linalg.norm(np.cross(e[1:], b[1:])) < 1e-8


@pytest.mark.criterion(7, "round trips: T reconstruction and duality orbits")
def test_round_trips():
    rng = np.random.default_rng(SEED + 7)
    null_hits = 0
    for k in range(100):
        if k % 2:
            F = random_null_field(rng, size=5.0)
        else:
            F = SkewField(rng.uniform(-10, 10, 3), rng.uniform(-10, 10, 3))
        Q = energy_momentum(F).matrix
        null_hits += lambda_T(F) <= 1e-7 * F.energy
        back = energy_momentum(reconstruct_skew(Q)).matrix
        assert np.max(np.abs(back - Q)) / np.max(np.abs(Q)) < 1e-7
    assert null_hits == 50

    for _ in range(100):
        F = SkewField(rng.uniform(-10, 10, 3), rng.uniform(-10, 10, 3))
        theta = rng.uniform(0, 2 * np.pi)
        found = duality_orbit_check(F, duality_rotate(F, theta))
        assert found is not None
        gap = abs((found - theta + np.pi) % (2 * np.pi) - np.pi)
        assert gap < 1e-8


@pytest.mark.criterion(8, "winding parity equals eigenvalue-continuation parity")
def test_winding_parity_matches_continuation():
    config = config_from_dict(fixture("electron_constant_b"))
    rng = np.random.default_rng(SEED + 8)
    skip = (errors.NullLocusCrossing, errors.RefinementExhausted, errors.SingularPoint,
            errors.AmbiguousContinuation)
    disagreements = 0
    odd = 0
    checked = 0
    while checked < 50:
        if rng.uniform() < 0.5:
            # near the singular circle x = 0, y^2 + z^2 = 1
            t = rng.uniform(0, 2 * np.pi)
            center = np.array([0.0, np.cos(t), np.sin(t)]) + rng.normal(scale=0.1, size=3)
            radius = rng.uniform(0.1, 0.5)
        else:
            center = rng.uniform(-3, 3, 3)
            radius = rng.uniform(0.1, 3.0)
        loop = Circle(center, random_unit(rng), radius)
        try:
            report = winding(config, loop)
            parity = eigenvalue_continuation(config, loop)
        except skip:
            continue
        checked += 1
        odd += report.parity is Parity.ODD
        disagreements += Parity.of(report.winding) is not parity
    assert disagreements == 0
    # both parities must actually occur for the comparison to mean anything
    assert 0 < odd < 50
