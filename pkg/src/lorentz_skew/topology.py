"""Static field configurations, the invariant map psi, and loop windings.

A configuration assigns a skew operator to each point of the ``t = 0`` slice.
``psi = (E^2 - B^2) + 2i E.B`` maps the non-null region ``M1`` into
``C - 0``; its winding along closed loops detects whether an eigenvector line
bundle exists (even winding) or not (odd winding).
"""

import enum
import math
from dataclasses import dataclass
from functools import reduce

import numpy as np

from .errors import (
    AmbiguousContinuation,
    NullLocusCrossing,
    RefinementExhausted,
    SingularPoint,
)
from .minkowski import spatial_vector
from .skew import SkewField
from .tolerance import default_tol

MAX_DEPTH = 12
DEFAULT_SAMPLES = 720
# continuation refines while |near - far| separation is this poor
_AMBIGUITY_RATIO = 0.5
_SINGULAR_RADIUS = 1e-12


class Region(enum.Enum):
    SINGULAR = "Singular"
    NULL_LOCUS = "NullLocus"
    M1 = "M1"


class Parity(enum.Enum):
    EVEN = "even"
    ODD = "odd"

    @classmethod
    def of(cls, n):
        return cls.ODD if n % 2 else cls.EVEN


def _points(points):
    p = np.asarray(points, dtype=float)
    if p.ndim == 1:
        p = p[None, :]
    if p.shape[-1] != 3 or not np.all(np.isfinite(p)):
        raise ValueError("points must be finite 3-vectors")
    return p


def _orthonormal_pair(n):
    """``(e1, e2)`` orthonormal, perpendicular to unit ``n``, with ``e1 x e2 = n``."""
    helper = np.eye(3)[int(np.argmin(np.abs(n)))]
    e1 = np.cross(n, helper)
    e1 /= np.linalg.norm(e1)
    return e1, np.cross(n, e1)


def _unit(v, what):
    v = spatial_vector(v)
    n = np.linalg.norm(v)
    if n == 0.0:
        raise ValueError(f"{what} must be nonzero")
    return v / n


# -- configurations ---------------------------------------------------------


@dataclass(frozen=True, eq=False)
class PointCharge:
    charge: float
    position: np.ndarray = (0.0, 0.0, 0.0)

    def __post_init__(self):
        object.__setattr__(self, "charge", float(self.charge))
        object.__setattr__(self, "position", spatial_vector(self.position))

    def fields_at(self, points):
        r = _points(points) - self.position
        dist = np.linalg.norm(r, axis=1)
        bad = dist <= _SINGULAR_RADIUS
        if np.any(bad):
            where = (r[bad][0] + self.position).tolist()
            raise SingularPoint(f"point {where} is a charge location")
        E = self.charge * r / dist[:, None] ** 3
        return E, np.zeros_like(E)

    def to_dict(self):
        return {"type": "point_charge", "charge": self.charge, "position": self.position.tolist()}


@dataclass(frozen=True, eq=False)
class UniformField:
    E: np.ndarray
    B: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "E", spatial_vector(self.E))
        object.__setattr__(self, "B", spatial_vector(self.B))

    def fields_at(self, points):
        n = _points(points).shape[0]
        return np.tile(self.E, (n, 1)), np.tile(self.B, (n, 1))

    def to_dict(self):
        return {"type": "uniform", "E": self.E.tolist(), "B": self.B.tolist()}


@dataclass(frozen=True, eq=False)
class PlaneWaveNull:
    """``E = a cos(k.r + phase) e1``, ``B = a cos(k.r + phase) e2`` with ``e1 x e2 = k_hat``.

    ``wave_vector`` fixes both the propagation axis and the spatial frequency.
    The field vanishes on the nodal planes, which classify as null locus.
    """

    amplitude: float
    wave_vector: np.ndarray
    phase: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "amplitude", float(self.amplitude))
        object.__setattr__(self, "wave_vector", spatial_vector(self.wave_vector))
        object.__setattr__(self, "phase", float(self.phase))
        _unit(self.wave_vector, "wave_vector")

    @property
    def polarization(self):
        return _orthonormal_pair(_unit(self.wave_vector, "wave_vector"))

    def fields_at(self, points):
        e1, e2 = self.polarization
        c = self.amplitude * np.cos(_points(points) @ self.wave_vector + self.phase)
        return c[:, None] * e1, c[:, None] * e2

    def to_dict(self):
        return {
            "type": "plane_wave_null",
            "amplitude": self.amplitude,
            "wave_vector": self.wave_vector.tolist(),
            "phase": self.phase,
        }


@dataclass(frozen=True, eq=False)
class Superposition:
    terms: tuple

    def __post_init__(self):
        terms = tuple(self.terms)
        if not terms:
            raise ValueError("a superposition needs at least one term")
        object.__setattr__(self, "terms", terms)

    def fields_at(self, points):
        parts = [t.fields_at(points) for t in self.terms]
        return sum(p[0] for p in parts), sum(p[1] for p in parts)

    def to_dict(self):
        return {"type": "superposition", "terms": [t.to_dict() for t in self.terms]}


@dataclass(frozen=True, eq=False)
class DualityRotated:
    """``base`` rotated by ``phi = theta + k * atan2(y, x)`` at each point.

    With ``k != 0`` the angle is undefined on the z-axis, which is treated as
    singular.
    """

    base: object
    theta: float = 0.0
    azimuthal_winding: int = 0

    def __post_init__(self):
        object.__setattr__(self, "theta", float(self.theta))
        k = self.azimuthal_winding
        if int(k) != k:
            raise ValueError("azimuthal_winding must be an integer")
        object.__setattr__(self, "azimuthal_winding", int(k))

    def fields_at(self, points):
        p = _points(points)
        E, B = self.base.fields_at(p)
        phi = np.full(p.shape[0], self.theta)
        if self.azimuthal_winding:
            on_axis = np.hypot(p[:, 0], p[:, 1]) <= _SINGULAR_RADIUS
            if np.any(on_axis):
                raise SingularPoint("the azimuthal angle is undefined on the z-axis")
            phi = phi + self.azimuthal_winding * np.arctan2(p[:, 1], p[:, 0])
        c, s = np.cos(phi)[:, None], np.sin(phi)[:, None]
        return c * E - s * B, c * B + s * E

    def to_dict(self):
        d = {"type": "duality_rotated", "base": self.base.to_dict(), "theta": self.theta}
        if self.azimuthal_winding:
            d["azimuthal_winding"] = self.azimuthal_winding
        return d


def config_from_dict(d):
    """Parse the JSON form of a configuration."""
    kind = d.get("type")
    if kind == "point_charge":
        return PointCharge(d["charge"], d.get("position", [0.0, 0.0, 0.0]))
    if kind == "uniform":
        return UniformField(d.get("E", [0.0, 0.0, 0.0]), d.get("B", [0.0, 0.0, 0.0]))
    if kind == "plane_wave_null":
        return PlaneWaveNull(d["amplitude"], d["wave_vector"], d.get("phase", 0.0))
    if kind == "superposition":
        return Superposition(tuple(config_from_dict(t) for t in d["terms"]))
    if kind == "duality_rotated":
        return DualityRotated(
            config_from_dict(d["base"]), d.get("theta", 0.0), d.get("azimuthal_winding", 0)
        )
    raise ValueError(f"unknown configuration type {kind!r}")


def point_charge_null_radius(charge, B_magnitude):
    """Radius of the null circle of a point charge in a uniform magnetic field.

    ``E.B`` vanishes on the plane through the charge perpendicular to ``B``
    and ``E^2 = B^2`` where ``q^2 / r^4 = B^2``.
    """
    return math.sqrt(abs(charge) / B_magnitude)


def eval_config(config, point):
    """The skew operator of ``config`` at ``point``."""
    E, B = config.fields_at(spatial_vector(point))
    return SkewField(E[0], B[0])


def psi(F):
    """``(E^2 - B^2) + 2i E.B``."""
    return complex(F.E2 - F.B2, 2.0 * F.EdotB)


def _psi_batch(config, points):
    E, B = config.fields_at(points)
    e2 = np.einsum("ij,ij->i", E, E)
    b2 = np.einsum("ij,ij->i", B, B)
    eb = np.einsum("ij,ij->i", E, B)
    return (e2 - b2) + 2j * eb, e2 + b2


def region_classify(config, point, tol=None):
    if tol is None:
        tol = default_tol()
    try:
        F = eval_config(config, point)
    except SingularPoint:
        return Region.SINGULAR
    if abs(psi(F)) <= tol * (F.E2 + F.B2):
        return Region.NULL_LOCUS
    return Region.M1


# -- loops --------------------------------------------------------------------


def _check_samples(samples):
    if int(samples) != samples or samples < 8:
        raise ValueError("samples must be an integer >= 8")
    return int(samples)


@dataclass(frozen=True, eq=False)
class Circle:
    center: np.ndarray
    normal: np.ndarray
    radius: float
    samples: int = DEFAULT_SAMPLES

    def __post_init__(self):
        object.__setattr__(self, "center", spatial_vector(self.center))
        object.__setattr__(self, "normal", _unit(self.normal, "normal"))
        if not self.radius > 0:
            raise ValueError("radius must be positive")
        object.__setattr__(self, "radius", float(self.radius))
        object.__setattr__(self, "samples", _check_samples(self.samples))

    def points_at(self, t):
        """Points at parameters ``t`` in ``[0, 1)``, counterclockwise about ``normal``."""
        e1, e2 = _orthonormal_pair(self.normal)
        a = 2 * np.pi * np.atleast_1d(np.asarray(t, dtype=float))
        return self.center + self.radius * (np.cos(a)[:, None] * e1 + np.sin(a)[:, None] * e2)

    def reversed(self):
        return Circle(self.center, -self.normal, self.radius, self.samples)

    def with_samples(self, samples):
        return Circle(self.center, self.normal, self.radius, samples)

    def to_dict(self):
        return {
            "kind": "circle",
            "center": self.center.tolist(),
            "normal": self.normal.tolist(),
            "radius": self.radius,
            "samples": self.samples,
        }


@dataclass(frozen=True, eq=False)
class Polyline:
    """Closed polygon through ``points``, parametrized proportionally to arc length."""

    points: np.ndarray
    samples: int = DEFAULT_SAMPLES

    def __post_init__(self):
        p = _points(self.points)
        if len(np.unique(p, axis=0)) < 3:
            raise ValueError("a polyline needs at least 3 distinct points")
        object.__setattr__(self, "points", p)
        object.__setattr__(self, "samples", _check_samples(self.samples))

    def points_at(self, t):
        closed = np.vstack([self.points, self.points[:1]])
        seg = np.linalg.norm(np.diff(closed, axis=0), axis=1)
        cum = np.concatenate(([0.0], np.cumsum(seg))) / seg.sum()
        t = np.atleast_1d(np.asarray(t, dtype=float)) % 1.0
        return np.column_stack([np.interp(t, cum, closed[:, k]) for k in range(3)])

    def reversed(self):
        return Polyline(self.points[::-1], self.samples)

    def with_samples(self, samples):
        return Polyline(self.points, samples)

    def to_dict(self):
        return {"kind": "polyline", "points": self.points.tolist(), "samples": self.samples}


def loop_from_dict(d):
    kind = d.get("kind")
    samples = d.get("samples", DEFAULT_SAMPLES)
    if kind == "circle":
        return Circle(d["center"], d["normal"], d["radius"], samples)
    if kind == "polyline":
        return Polyline(d["points"], samples)
    raise ValueError(f"unknown loop kind {kind!r}")


# -- winding ------------------------------------------------------------------


@dataclass(frozen=True)
class WindingReport:
    winding: int
    parity: Parity
    min_abs_psi: float
    samples_used: int
    refined: bool

    def to_dict(self):
        return {
            "winding": self.winding,
            "parity": self.parity.value,
            "min_abs_psi": self.min_abs_psi,
            "samples_used": self.samples_used,
            "refined": self.refined,
        }


class _Sampler:
    """Evaluates psi along a loop and enforces the null-locus clearance."""

    def __init__(self, config, loop, tol):
        self.config = config
        self.loop = loop
        self.tol = default_tol() if tol is None else tol
        self.count = 0
        self.min_abs = math.inf

    def __call__(self, t):
        t = np.atleast_1d(np.asarray(t, dtype=float))
        pts = self.loop.points_at(t)
        values, scale = _psi_batch(self.config, pts)
        mags = np.abs(values)
        bad = mags <= self.tol * scale
        if np.any(bad):
            k = int(np.argmax(bad))
            raise NullLocusCrossing(
                f"loop meets the null locus at parameter t = {t[k]:.9g}",
                parameter=t[k],
                point=pts[k],
            )
        self.count += len(t)
        self.min_abs = min(self.min_abs, float(mags.min()))
        return values


def _coarse(sampler):
    n = sampler.loop.samples
    t = np.arange(n + 1) / n
    values = sampler(t[:-1])
    # the closing sample is the starting one
    return t, np.append(values, values[0])


def winding(config, loop, tol=None):
    """Winding number of psi along ``loop``.

    Phase increments are taken on the principal branch; any step larger than
    ``pi/2`` is bisected (to depth 12) so that the integer is certified.
    """
    sampler = _Sampler(config, loop, tol)
    t, values = _coarse(sampler)
    refined = False

    def increment(t0, t1, p0, p1, depth):
        nonlocal refined
        d = float(np.angle(p1 / p0))
        if abs(d) <= np.pi / 2:
            return d
        if depth >= MAX_DEPTH:
            raise RefinementExhausted(
                f"phase step still above pi/2 after {MAX_DEPTH} bisections near t = {t0:.9g}"
            )
        refined = True
        tm = 0.5 * (t0 + t1)
        pm = sampler(tm)[0]
        return increment(t0, tm, p0, pm, depth + 1) + increment(tm, t1, pm, p1, depth + 1)

    steps = np.angle(values[1:] / values[:-1])
    total = float(steps.sum())
    for k in np.flatnonzero(np.abs(steps) > np.pi / 2):
        total += increment(t[k], t[k + 1], values[k], values[k + 1], 0) - steps[k]
    turns = total / (2 * np.pi)
    n = int(round(turns))
    if abs(turns - n) >= 1e-6:
        raise RefinementExhausted(f"phase total {turns:.9g} turns is not an integer")
    return WindingReport(n, Parity.of(n), sampler.min_abs, sampler.count, refined)


def eigenvalue_continuation(config, loop, tol=None):
    """Parity from continuing ``lambda = sqrt(psi)`` once around ``loop``.

    Each step picks the square root nearer the previous value.  A step whose
    two candidates are comparably close is bisected; if that persists to
    depth 12 the continuation is ambiguous.
    """
    sampler = _Sampler(config, loop, tol)
    t, values = _coarse(sampler)
    roots = np.sqrt(values)

    def step(lam, t0, t1, root1, depth):
        near, far = abs(root1 - lam), abs(root1 + lam)
        if near > far:
            near, far, root1 = far, near, -root1
        if near <= _AMBIGUITY_RATIO * far:
            return root1
        if depth >= MAX_DEPTH:
            raise AmbiguousContinuation(
                f"square-root branches stay near-antipodal after {MAX_DEPTH} bisections "
                f"near t = {t0:.9g}"
            )
        tm = 0.5 * (t0 + t1)
        mid = step(lam, t0, tm, np.sqrt(sampler(tm)[0]), depth + 1)
        return step(mid, tm, t1, root1, depth + 1)

    lam = roots[0]
    for k in range(len(t) - 1):
        lam = step(lam, t[k], t[k + 1], roots[k + 1], 0)
    return Parity.EVEN if abs(lam - roots[0]) < abs(lam + roots[0]) else Parity.ODD


def degree(config, loops, tol=None):
    """gcd of the absolute windings over ``loops`` (a lower-bound witness)."""
    loops = list(loops)
    if not loops:
        raise ValueError("need at least one loop")
    return reduce(math.gcd, (abs(winding(config, lp, tol).winding) for lp in loops), 0)
