//! Two-sided bounds on the largest nontrivial value `γ` of `|χ|` and upper
//! bounds on every level, derived from `a_{1,t}` and from Kronecker coefficients.

use serde::Serialize;

use super::multiplicity::{
    level_power, ln_trivial_excess, log_sum_exp, multiplicity, trivial_multiplicity,
};
use crate::algebraics::Tolerance;
use crate::error::{Error, Result};
use crate::spectrum::{incidence_numbers, Spectrum};
use crate::table::{require_full_table, trivial_on_kernel, CharacterTable};

/// Agreement required between the Markov-inequality bound and the level-sum bound.
pub const MARKOV_COHERENCE_REL: f64 = 1e-12;

/// Bounds on `γ/n` at one exponent `t`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GammaBounds {
    pub t: f64,
    /// `γ/n`.
    pub gamma_ratio: f64,
    pub lower: f64,
    pub upper: f64,
    /// The upper bound recomputed from `E_C(|χ|^t)` via Markov's inequality.
    pub markov_upper: f64,
    /// `((γ/n)^t |C_0|/|G| + |K|/|G|)^{1/t}`.
    pub dual_lower: f64,
    /// `((γ/n)^t (|G|-|G_0|-|K|)/|G| + |K|/|G|)^{1/t}`.
    pub dual_upper: f64,
    /// `a_{1,t}^{1/t} / n`, which the dual pair brackets.
    pub root_ratio: f64,
    /// `a_{1,t}/n^t`.
    pub a1t_normalized: f64,
}

fn check_positive_t(t: f64) -> Result<()> {
    if t > 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!("t must be positive, got {t}")))
    }
}

/// Lower and upper bounds on `γ/n` from `a_{1,t}`, with the equivalent
/// bounds on `a_{1,t}^{1/t}/n`.
pub fn gamma_bounds(spec: &Spectrum, t: f64) -> Result<GammaBounds> {
    check_positive_t(t)?;
    let g = spec.group_order as f64;
    let n = spec.n as f64;
    let ln_excess = ln_trivial_excess(spec, t);
    let lower = ((ln_excess - (spec.nonzero_size() as f64 / g).ln()) / t).exp();
    let upper = ((ln_excess - (spec.top_size as f64 / g).ln()) / t).exp();

    // Markov: |C_0|/|C| <= E_C(|χ|^t)/γ^t with |C| E_C(|χ|^t) = Σ_q |C_q| γ_q^t
    let ln_mass = log_sum_exp(
        spec.levels
            .iter()
            .filter(|l| l.gamma > 0.0)
            .map(|l| (l.size as f64).ln() + t * l.gamma.ln()),
    );
    let markov_upper = ((ln_mass - (spec.top_size as f64).ln()) / t).exp() / n;
    if (markov_upper - upper).abs() > MARKOV_COHERENCE_REL * upper {
        return Err(Error::CrossCheckFailure {
            level_sum: upper,
            class_sum: markov_upper,
        });
    }

    let gamma_ratio = spec.gamma() / n;
    let k_share = spec.kernel.order as f64 / g;
    let gt = level_power(gamma_ratio, t);
    let dual_upper = (gt * spec.nonzero_size() as f64 / g + k_share).powf(1.0 / t);
    let dual_lower = (gt * spec.top_size as f64 / g + k_share).powf(1.0 / t);
    let a1t = trivial_multiplicity(spec, t)?;
    Ok(GammaBounds {
        t,
        gamma_ratio,
        lower,
        upper,
        markov_upper,
        dual_lower,
        dual_upper,
        root_ratio: a1t.normalized.powf(1.0 / t),
        a1t_normalized: a1t.normalized,
    })
}

/// Upper bounds on `γ_q` for every level, using cumulative level sizes.
pub fn level_upper_bounds(spec: &Spectrum, t: f64) -> Result<Vec<f64>> {
    check_positive_t(t)?;
    let g = spec.group_order as f64;
    let ln_excess = ln_trivial_excess(spec, t);
    Ok((0..spec.levels.len())
        .map(|q| {
            let share = spec.cumulative_size(q) as f64 / g;
            spec.n as f64 * ((ln_excess - share.ln()) / t).exp()
        })
        .collect())
}

/// `[√((|G|-n²)/(|G|-|G_0|-1)), √((|G|-n²)/|C_0|)]`, valid when `|K| = 1`.
pub fn centerless_bounds(spec: &Spectrum) -> Result<(f64, f64)> {
    if spec.kernel.order != 1 {
        return Err(Error::HypothesisNotMet(format!(
            "scalar subgroup has order {}, expected 1",
            spec.kernel.order
        )));
    }
    let num = spec.group_order as f64 - (spec.n * spec.n) as f64;
    Ok((
        (num / spec.nonzero_size() as f64).sqrt(),
        (num / spec.top_size as f64).sqrt(),
    ))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KroneckerCoefficients {
    /// Targets in list order (trivial first).
    pub targets: Vec<usize>,
    /// `a_i = a_{i,2}`.
    pub coefficients: Vec<u64>,
    /// `Σ a_i² = ‖χχ̄‖²`.
    pub sum_squares: u64,
}

/// Multiplicities of the characters trivial on `K` in `χ ⊗ χ̄`.
pub fn kronecker_coeffs(
    ct: &CharacterTable,
    spec: &Spectrum,
    tol: &Tolerance,
) -> Result<KroneckerCoefficients> {
    require_full_table(ct, tol)?;
    let targets = trivial_on_kernel(ct, &spec.kernel, tol)?;
    let mut coefficients = Vec::with_capacity(targets.len());
    for &i in &targets {
        let profile = incidence_numbers(ct, spec, i, tol)?;
        let value = multiplicity(ct, spec, &profile, 2.0, tol)?
            .raw
            .expect("n^2 is finite");
        let rounded = value.round();
        if (value - rounded).abs() > tol.integrality_eps || rounded < 0.0 {
            return Err(Error::IntegralityFailure { target: i, value });
        }
        coefficients.push(rounded as u64);
    }
    let sum_squares = coefficients.iter().map(|a| a * a).sum();
    Ok(KroneckerCoefficients {
        targets,
        coefficients,
        sum_squares,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct KroneckerBounds {
    pub lower: f64,
    pub upper: f64,
    /// Upper bound on each `γ_q` from cumulative level sizes.
    pub level_uppers: Vec<f64>,
    pub sum_squares: u64,
}

/// Fourth-root bounds on `γ` from `Σ a_i²`.
pub fn kronecker_bounds(
    ct: &CharacterTable,
    spec: &Spectrum,
    tol: &Tolerance,
) -> Result<KroneckerBounds> {
    let coeffs = kronecker_coeffs(ct, spec, tol)?;
    let g = spec.group_order as f64;
    let n4 = (spec.n as f64).powi(4);
    let num = g * coeffs.sum_squares as f64 - spec.kernel.order as f64 * n4;
    let level_uppers = (0..spec.levels.len())
        .map(|q| (num / spec.cumulative_size(q) as f64).powf(0.25))
        .collect();
    Ok(KroneckerBounds {
        lower: (num / spec.nonzero_size() as f64).powf(0.25),
        upper: (num / spec.top_size as f64).powf(0.25),
        level_uppers,
        sum_squares: coeffs.sum_squares,
    })
}

/// Everything that bounds `γ` at one exponent.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundsReport {
    pub t: f64,
    pub gamma: f64,
    pub gamma_bounds: GammaBounds,
    /// Upper bounds on `γ_q` from `a_{1,t}`.
    pub level_uppers: Vec<f64>,
    /// Present when `|K| = 1`.
    pub centerless_interval: Option<(f64, f64)>,
    /// Present when the table is complete.
    pub kronecker: Option<KroneckerBounds>,
    /// `a_{1,t}`.
    pub a1t: Option<f64>,
}

impl BoundsReport {
    pub fn gamma_lower(&self) -> f64 {
        self.gamma_bounds.lower
    }

    pub fn gamma_upper(&self) -> f64 {
        self.gamma_bounds.upper
    }
}

pub fn bounds_report(
    ct: &CharacterTable,
    spec: &Spectrum,
    t: f64,
    tol: &Tolerance,
) -> Result<BoundsReport> {
    let gamma_bounds = gamma_bounds(spec, t)?;
    let kronecker = match kronecker_bounds(ct, spec, tol) {
        Ok(k) => Some(k),
        Err(Error::IncompleteTable(reason)) => {
            log::warn!("skipping Kronecker bounds: {reason}");
            None
        }
        Err(e) => return Err(e),
    };
    Ok(BoundsReport {
        t,
        gamma: spec.gamma(),
        level_uppers: level_upper_bounds(spec, t)?,
        centerless_interval: centerless_bounds(spec).ok(),
        kronecker,
        a1t: trivial_multiplicity(spec, t)?.raw,
        gamma_bounds,
    })
}
