import os

DEFAULT_TOL = 1e-9
ENV_VAR = "LORENTZ_SKEW_TOL"


def default_tol():
    """Global relative tolerance; ``LORENTZ_SKEW_TOL`` overrides the default."""
    raw = os.environ.get(ENV_VAR)
    if not raw:
        return DEFAULT_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise ValueError(f"{ENV_VAR}={raw!r} is not a number") from None
    if not tol > 0:
        raise ValueError(f"{ENV_VAR} must be positive, got {tol}")
    return tol
