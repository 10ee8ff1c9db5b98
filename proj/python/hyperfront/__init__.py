"""Front speeds of hyperbolic bistable reaction-diffusion equations."""

from ._core import (
    BlowUp,
    EvaluationAtJump,
    Grid,
    HyperfrontError,
    ManifoldIntegrator,
    ModelParams,
    NoCrossing,
    NonConvergence,
    NumericalError,
    ReactionModel,
    SchemeKind,
    ShootingConfig,
    ShootingResult,
    ValidationError,
    WrongRegime,
    closed_form_speed,
    damped_cubic_speed,
    eigenvalues,
    equal_depth_profile,
    exact_csv,
    find_speed,
    leveque_yee_step,
    mismatch,
    parabolic_cubic_speed,
    pwl_speed,
    run,
    run_table,
    scout_and_spot,
    speed_bracket,
)

__all__ = [name for name in dir() if not name.startswith("_")]
