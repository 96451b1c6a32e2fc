"""Electromagnetic fields as metric-skew operators on Minkowski space."""

from .eigen import (
    EigenData,
    PrincipalNullPair,
    char_poly,
    complex_eigenplane,
    eigenvalues,
    is_null,
    null_eigendirection,
    principal_null_pair,
    psi_map,
    psi_v_determinant,
)
from .energy import (
    EnergyMomentum,
    InvariantPlanes,
    check_tensor,
    duality_orbit_check,
    energy_momentum,
    invariant_planes,
    lambda_T,
    poynting,
    reconstruct_skew,
)
from .errors import (
    AmbiguousContinuation,
    InvalidTensor,
    LorentzSkewError,
    NotNull,
    NullField,
    NullLocusCrossing,
    OrientationMismatch,
    RefinementExhausted,
    SingularPoint,
    SuperluminalVelocity,
    ZeroField,
    ZeroVelocity,
)
from .lorentz import (
    FieldTransformResult,
    boost_observer,
    doppler_null,
    eigenvector_scale_factor,
    exp_complex,
    exp_map,
    lorentz_force,
    par_perp_decompose,
    poynting_eliminating_velocity,
    transform_fields,
)
from .minkowski import (
    E0,
    METRIC,
    CausalClass,
    ComplexNullClass,
    classify,
    classify_complex_null,
    complex_inner,
    inner,
)
from .skew import (
    ComplexSkewOp,
    SkewField,
    algebra_span_dim,
    commutator,
    complexify,
    duality_rotate,
    extract_fields,
    from_fields,
    from_matrix,
    hodge_dual,
    pauli_basis,
)
from .topology import (
    Circle,
    Parity,
    Polyline,
    Region,
    WindingReport,
    config_from_dict,
    degree,
    eigenvalue_continuation,
    eval_config,
    loop_from_dict,
    region_classify,
    winding,
)

__version__ = "0.1.0"
