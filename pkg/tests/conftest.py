import numpy as np
import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from lorentz_skew import SkewField

settings.register_profile(
    "default", max_examples=60, deadline=None, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

finite = st.floats(-10.0, 10.0, allow_nan=False, allow_infinity=False)
vec3 = arrays(np.float64, 3, elements=finite)
vec4 = arrays(np.float64, 4, elements=finite)


def _big_enough(v, floor=1e-3):
    return float(np.linalg.norm(v)) > floor


# fields bounded away from zero, so relative tolerances are meaningful
fields = st.builds(SkewField, vec3, vec3).filter(lambda F: F.E2 + F.B2 > 1e-4)


@st.composite
def velocities(draw, bound=0.95):
    d = draw(arrays(np.float64, 3, elements=st.floats(-1, 1)).filter(_big_enough))
    speed = draw(st.floats(0.0, bound))
    return d / np.linalg.norm(d) * speed


@st.composite
def null_fields(draw):
    """``E`` and ``B`` of equal length and orthogonal."""
    e = draw(vec3.filter(lambda v: _big_enough(v, 1e-2)))
    helper = draw(vec3.filter(lambda v: _big_enough(np.cross(e, v), 1e-2)))
    b = np.cross(e, helper)
    b *= np.linalg.norm(e) / np.linalg.norm(b)
    return SkewField(e, b)


def rel_err(a, b, scale=None):
    a = np.asarray(a)
    b = np.asarray(b)
    if scale is None:
        scale = max(1.0, float(np.max(np.abs(b))))
    return float(np.max(np.abs(a - b))) / scale


@pytest.fixture
def rng():
    return np.random.default_rng(20240917)


@st.composite
def exact_null_fields(draw):
    """Null fields whose invariants vanish exactly in floating point.

    ``E = (p, q, 0)`` and ``B = (-q, p, 0)`` with small integers, then an axis
    permutation and sign flips, all of which are exact.
    """
    p, q = draw(st.tuples(st.integers(-20, 20), st.integers(-20, 20)).filter(lambda t: t != (0, 0)))
    scale = 2.0 ** draw(st.integers(-4, 4))
    E = scale * np.array([p, q, 0.0])
    B = scale * np.array([-q, p, 0.0])
    perm = draw(st.permutations([0, 1, 2]))
    signs = np.array(draw(st.lists(st.sampled_from([1.0, -1.0]), min_size=3, max_size=3)))
    E, B = E[perm] * signs, B[perm] * signs
    if draw(st.booleans()):
        E, B = B, -E
    return SkewField(E, B)


# one summary line per acceptance criterion, printed whether or not -s is given
_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(number, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    mark = item.get_closest_marker("criterion")
    if mark is None:
        return
    if report.when == "call" or (report.when == "setup" and report.failed):
        _ACCEPTANCE[mark.args[0]] = (mark.args[1], report.passed)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, ok = _ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}  {title}")
