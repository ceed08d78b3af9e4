//! Large-`t` behaviour of `a_{i,t}/n^t`, the total `c_t(ρ)`, and the
//! identities that pin down the limits.

use serde::Serialize;

use super::multiplicity::{level_power, limit_value, multiplicity_excess, trivial_multiplicity};
use crate::algebraics::{AlgebraicValue, Tolerance};
use crate::error::{Error, Result};
use crate::spectrum::{MultiplicityProfile, Spectrum};
use crate::table::{CharacterTable, Kernel};

/// Exponent at which the rate and equivalence diagnostics are sampled.
pub const DIAGNOSTIC_T: f64 = 64.0;

/// Exponents at which `c_t(ρ)` is sampled.
pub const C_T_GRID: [f64; 9] = [0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Above,
    Below,
    Flat,
}

impl std::fmt::Display for Direction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Direction::Above => "above",
            Direction::Below => "below",
            Direction::Flat => "flat",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TargetAsymptotics {
    pub target_index: usize,
    /// `(|K|/|G|) n_i`.
    pub limit: f64,
    pub direction: Direction,
    /// `γ̂_i / n`.
    pub rate: Option<f64>,
    /// `|a_{i,t}/n^t - limit|^{1/t}` at [`DIAGNOSTIC_T`].
    pub log_slope: Option<f64>,
    /// `ι_i^{-1}(a_{i,t}/n^t - limit) / (γ̂_i/n)^t` at [`DIAGNOSTIC_T`]; tends to 1.
    pub equivalence_ratio: Option<f64>,
    /// `|a_{i,t}^{1/t} - n| / n` at [`DIAGNOSTIC_T`].
    pub root_deviation: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AsymptoticsReport {
    pub targets: Vec<TargetAsymptotics>,
    /// `(t, c_t(ρ))` with `c_t(ρ) = Σ_i a_{i,t}/n^t`.
    pub c_t: Vec<(f64, f64)>,
    /// `c(ρ) = (|K|/|G|) Σ n_i`.
    pub c_rho: f64,
    /// `√(k / |G/K|)`.
    pub cauchy_schwarz_bound: f64,
    /// `max_g |(|K|/|G|) Σ n_i χ_i(g) - δ_K(g)|`.
    pub delta_k_residual: f64,
}

/// Per-target limits and approach, plus the global limit `c(ρ)`.
pub fn asymptotics(
    ct: &CharacterTable,
    spec: &Spectrum,
    profiles: &[MultiplicityProfile],
) -> Result<AsymptoticsReport> {
    if profiles.is_empty() {
        return Err(Error::Domain("at least one profile is required".into()));
    }
    let n = spec.n as f64;
    let targets = profiles
        .iter()
        .map(|p| {
            let limit = limit_value(spec, p.target_dim);
            let direction = match p.leading_iota {
                None => Direction::Flat,
                Some(iota) if iota > 0.0 => Direction::Above,
                Some(_) => Direction::Below,
            };
            let excess = multiplicity_excess(spec, p, DIAGNOSTIC_T);
            let rate = p.leading_gamma.map(|g| g / n);
            let log_slope = rate.map(|_| excess.abs().powf(1.0 / DIAGNOSTIC_T));
            let equivalence_ratio = match (rate, p.leading_iota) {
                (Some(r), Some(iota)) => {
                    Some(excess * spec.group_order as f64 / iota / level_power(r, DIAGNOSTIC_T))
                }
                _ => None,
            };
            // a_{i,t}^{1/t} = n (a_{i,t}/n^t)^{1/t}
            let normalized = limit + excess;
            let root_deviation = (normalized.powf(1.0 / DIAGNOSTIC_T) - 1.0).abs();
            TargetAsymptotics {
                target_index: p.target_index,
                limit,
                direction,
                rate,
                log_slope,
                equivalence_ratio,
                root_deviation,
            }
        })
        .collect();

    let c_t = C_T_GRID
        .iter()
        .map(|&t| {
            let total = profiles
                .iter()
                .map(|p| limit_value(spec, p.target_dim) + multiplicity_excess(spec, p, t))
                .sum();
            (t, total)
        })
        .collect();

    let k = profiles.len() as f64;
    let quotient = (spec.group_order / spec.kernel.order) as f64;
    let dims: u64 = profiles.iter().map(|p| p.target_dim).sum();
    let list: Vec<usize> = profiles.iter().map(|p| p.target_index).collect();
    Ok(AsymptoticsReport {
        targets,
        c_t,
        c_rho: spec.kernel.order as f64 / spec.group_order as f64 * dims as f64,
        cauchy_schwarz_bound: (k / quotient).sqrt(),
        delta_k_residual: delta_k_residual(ct, &spec.kernel, &list),
    })
}

/// Residual of `δ_K = (|K|/|G|) Σ_i n_i χ_i` over all classes; exactly `0.0`
/// on the exact path when `list` holds every character trivial on `K`.
pub fn delta_k_residual(ct: &CharacterTable, kernel: &Kernel, list: &[usize]) -> f64 {
    (0..ct.num_classes())
        .map(|j| {
            let sum = list.iter().fold(AlgebraicValue::zero(), |acc, &i| {
                acc.add(&ct.value(i, j).scale(ct.dimension(i) as i64))
            });
            let expected = if kernel.contains(j) {
                (ct.order() / kernel.order) as i64
            } else {
                0
            };
            // compare |G|/|K| δ_K with Σ n_i χ_i, then rescale
            let diff = sum.sub(&AlgebraicValue::from_integer(expected));
            if diff.is_exact() && diff.is_zero() {
                0.0
            } else {
                diff.modulus_f64() * kernel.order as f64 / ct.order() as f64
            }
        })
        .fold(0.0, f64::max)
}

/// `|LHS - RHS|` for
/// `(a_{1,t}/n^t - |K|/|G|)/(|C_0|/|G|) = (γ/n)^t (1 + Σ_{q≥1} (|C_q|/|C_0|)(γ_q/γ)^t)`.
pub fn remainder_identity_check(spec: &Spectrum, t: f64) -> Result<f64> {
    if !(t > 0.0 && t.is_finite()) {
        return Err(Error::Domain(format!("t must be positive, got {t}")));
    }
    let g = spec.group_order as f64;
    let a1 = trivial_multiplicity(spec, t)?.normalized;
    let lhs = (a1 - spec.kernel.order as f64 / g) / (spec.top_size as f64 / g);
    let gamma = spec.gamma();
    let tail: f64 = spec.levels[1..]
        .iter()
        .map(|l| l.size as f64 / spec.top_size as f64 * level_power(l.gamma / gamma, t))
        .sum();
    let rhs = level_power(gamma / spec.n as f64, t) * (1.0 + tail);
    Ok((lhs - rhs).abs())
}

/// `√(k/|G/K|) - c(ρ)`; negative slack beyond `abs_eps` means the table is inconsistent.
pub fn cauchy_schwarz_slack(report: &AsymptoticsReport, tol: &Tolerance) -> Result<f64> {
    let slack = report.cauchy_schwarz_bound - report.c_rho;
    if slack < -tol.abs_eps {
        return Err(Error::InconsistentTable(format!(
            "c(ρ) = {} exceeds √(k/|G/K|) = {}",
            report.c_rho, report.cauchy_schwarz_bound
        )));
    }
    Ok(slack)
}
