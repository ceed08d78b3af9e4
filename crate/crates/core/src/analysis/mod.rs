//! Numerical consequences of a level spectrum: multiplicities, bounds on
//! character values, curves and large-`t` asymptotics.

mod asymptotics;
mod bounds;
mod conjecture;
mod multiplicity;

pub use asymptotics::{
    asymptotics, cauchy_schwarz_slack, delta_k_residual, remainder_identity_check,
    AsymptoticsReport, Direction, TargetAsymptotics, C_T_GRID, DIAGNOSTIC_T,
};
pub use bounds::{
    bounds_report, centerless_bounds, gamma_bounds, kronecker_bounds, kronecker_coeffs,
    level_upper_bounds, BoundsReport, GammaBounds, KroneckerBounds, KroneckerCoefficients,
    MARKOV_COHERENCE_REL,
};
pub use conjecture::{conjecture_scan, CharacterScan, ConjectureReport, TargetScan, WITNESS_GRID};
pub use multiplicity::{
    class_sum_multiplicity, class_sum_profile, limit_value, mult_curve, multiplicity,
    multiplicity_excess, t_range, trivial_multiplicity, CurveSample, Multiplicity, CROSS_CHECK_REL,
};
