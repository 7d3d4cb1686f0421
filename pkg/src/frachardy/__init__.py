"""Sharp constants of fractional Hardy inequalities via fractional Cheeger problems."""
from .constants import (
    FracParams,
    ball_ratio_bound,
    c_constant,
    c_constant_quadrature,
    classical_constant,
    halfline_tail_integral,
    lambda_constant,
    perimeter_ball_closed,
    sharp_halfspace,
    sharp_punctured,
    unit_ball_volume,
)
from .fracmeasures import (
    MeasureResult,
    Method,
    hardy_ratio_step,
    perimeter_interval_union,
    perimeter_monte_carlo,
    perimeter_oracle,
    seminorm_s1_step,
    weighted_volume,
    weighted_volume_ball,
)
from .sets1d import (
    Bounded,
    Domain1D,
    HalfLine,
    IntervalUnion,
    PuncturedLine,
    RadialProfile,
    StepFunction,
    ball_delta_rearranged,
    delta_levelset_measure,
    distance,
    hausdorff_distance,
    parse_domain,
    punctured_box,
    rearrange_delta_equal,
    rearrange_radius,
    rearrange_step,
)
from .specfun import (
    DomainError,
    QuadratureError,
    QuadratureSpec,
    beta,
    inc_beta,
    integrate,
    integrate_weighted,
    log_beta,
    log_gamma,
)
from .variational import (
    CheegerResult,
    GridFunction,
    MinimizationError,
    MinimizeConfig,
    RayleighResult,
    cheeger_quotient,
    cheeger_search,
    minimize_rayleigh,
    product_upper_bound,
    seminorm_p_grid,
    weighted_lp_grid,
)
from .verify import ClaimCheck, Relation, Status, VerifyConfig, run_all

__version__ = "0.1.0"
