"""Level-set fuzzy arithmetic, operator semigroups and fuzzy Cauchy solvers."""

from .core import (
    DEFAULT_LEVELS,
    FuzzyNumber,
    Triangular,
    add,
    crisp,
    distance,
    fuzzy_from_json,
    fuzzy_to_json,
    hukuhara_diff,
    level_grid,
    make_triangular,
    membership,
    norm,
    oriented_hukuhara_diff,
    scalar_mul,
    symmetric_triangular,
    zero,
    zero_like,
)
from .errors import (
    ArityMismatch,
    DomainMismatch,
    FuzzsemiError,
    HDifferenceError,
    LengthMismatch,
    MissingDerivativeBound,
    MixedSignsError,
    MuNotPositive,
    NoApplicableForm,
    OrderViolation,
    ProbeNormViolation,
    QuadratureStall,
    SchemaError,
    SpaceMismatch,
    UnsupportedVelocity,
)
from .spaces import (
    FuzzyFunction,
    FuzzySequence,
    ProductElement,
    box_distance,
    cp_sup_distance,
    elem_add,
    elem_dist,
    elem_hdiff,
    elem_norm,
    elem_scale,
    elem_zero,
    lp_distance,
    mu_metric,
    pair,
    rho_p_metric,
    sup_distance,
)
from .operators import (
    LinearOperator,
    builtin,
    canonical_probes,
    compose,
    identity,
    lift_matrix,
    mu_coeff,
    phi_distance,
    power,
    scale_operator,
    zero_operator,
)
from .semigroup import (
    SemigroupEvaluator,
    check_semigroup_law,
    cosh_apply,
    exp_apply,
    generator_pair_closed_form,
    generator_residual,
    required_order,
    series_apply,
    sinh_apply,
)
from .cauchy import (
    CauchyProblem,
    Trajectory,
    fuzziness_residual,
    integrate_fuzzy,
    naive_problem5_formula,
    problem4_closed_form,
    problem5_closed_form,
    problem6_closed_form,
    residual_check,
    solve_first_order,
    solve_second_order,
    solve_wave,
    uniform_times,
)

__version__ = "0.1.0"
