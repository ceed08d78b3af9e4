//! Multiplicities `a_{i,t}` of irreducibles in `|χ|^t`, by level sums and by class sums.

use rayon::prelude::*;
use serde::Serialize;

use crate::algebraics::Tolerance;
use crate::error::{Error, Result};
use crate::spectrum::{MultiplicityProfile, Spectrum};
use crate::table::CharacterTable;

/// Largest `t ln n` for which `n^t` is still a finite `f64`.
const MAX_LN_SCALE: f64 = 709.0;

/// Relative agreement required between the level-sum and class-sum routes.
pub const CROSS_CHECK_REL: f64 = 1e-8;

/// `r^t` for a level ratio `r = γ/n`, with the vanishing level contributing
/// nothing for every `t >= 0` (so `|χ|^0` is the indicator of `G ∖ G_0`).
pub(crate) fn level_power(ratio: f64, t: f64) -> f64 {
    if ratio == 0.0 {
        0.0
    } else if t == 0.0 {
        1.0
    } else {
        ratio.powf(t)
    }
}

/// `ln Σ exp(x_k)` over finite terms; `-inf` when there are none.
pub(crate) fn log_sum_exp(terms: impl IntoIterator<Item = f64>) -> f64 {
    let terms: Vec<f64> = terms.into_iter().filter(|x| x.is_finite()).collect();
    let Some(max) = terms.iter().copied().reduce(f64::max) else {
        return f64::NEG_INFINITY;
    };
    max + terms.iter().map(|x| (x - max).exp()).sum::<f64>().ln()
}

/// `a_{i,t}` reported normalised by `n^t` and raw.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Multiplicity {
    pub t: f64,
    /// `a_{i,t} / n^t`.
    pub normalized: f64,
    /// `a_{i,t}`, or `None` once `n^t` overflows.
    pub raw: Option<f64>,
    /// `ln |a_{i,t}|`, always available.
    pub ln_abs_raw: f64,
}

impl Multiplicity {
    pub(crate) fn new(t: f64, n: u64, normalized: f64) -> Self {
        let ln_scale = t * (n as f64).ln();
        let raw = (ln_scale <= MAX_LN_SCALE).then(|| normalized * (n as f64).powf(t));
        Self {
            t,
            normalized,
            raw,
            ln_abs_raw: normalized.abs().ln() + ln_scale,
        }
    }
}

fn check_t(t: f64) -> Result<()> {
    if t >= 0.0 && t.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "t must be finite and nonnegative, got {t}"
        )))
    }
}

/// `(1/|G|) Σ_q ι_{i,q} (γ_q/n)^t`: the deviation of `a_{i,t}/n^t` from its limit.
pub fn multiplicity_excess(spec: &Spectrum, profile: &MultiplicityProfile, t: f64) -> f64 {
    let sum: f64 = spec
        .ratios()
        .iter()
        .zip(&profile.incidences)
        .map(|(&r, &iota)| iota * level_power(r, t))
        .sum();
    sum / spec.group_order as f64
}

/// `(|K|/|G|) n_i`, the large-`t` limit of `a_{i,t}/n^t`.
pub fn limit_value(spec: &Spectrum, target_dim: u64) -> f64 {
    spec.kernel.order as f64 / spec.group_order as f64 * target_dim as f64
}

fn level_sum_normalized(spec: &Spectrum, profile: &MultiplicityProfile, t: f64) -> f64 {
    limit_value(spec, profile.target_dim) + multiplicity_excess(spec, profile, t)
}

/// `a_{i,t}/n^t = <χ_i, (|χ|/n)^t>` summed class by class, independent of any level data.
pub fn class_sum_multiplicity(
    ct: &CharacterTable,
    chi: usize,
    target: usize,
    t: f64,
    tol: &Tolerance,
) -> Result<f64> {
    check_t(t)?;
    let n = ct.dimension(chi) as f64;
    let sum: f64 = (0..ct.num_classes())
        .map(|j| {
            let modulus = ct.value(chi, j).modulus_f64();
            let ratio = if modulus <= tol.abs_eps {
                0.0
            } else {
                modulus / n
            };
            let weight = level_power(ratio, t);
            ct.classes()[j].size as f64 * ct.value(target, j).re().to_f64() * weight
        })
        .sum();
    Ok(sum / ct.order() as f64)
}

/// `a_{i,t}` by the level sum, cross-checked against the class sum.
pub fn multiplicity(
    ct: &CharacterTable,
    spec: &Spectrum,
    profile: &MultiplicityProfile,
    t: f64,
    tol: &Tolerance,
) -> Result<Multiplicity> {
    check_t(t)?;
    let level_sum = level_sum_normalized(spec, profile, t);
    let class_sum = class_sum_multiplicity(ct, spec.char_index, profile.target_index, t, tol)?;
    let scale = 1f64.max(level_sum.abs()).max(class_sum.abs());
    if (level_sum - class_sum).abs() > CROSS_CHECK_REL * scale {
        return Err(Error::CrossCheckFailure {
            level_sum,
            class_sum,
        });
    }
    Ok(Multiplicity::new(t, spec.n, level_sum))
}

/// `ln((1/|G|) Σ_q |C_q| (γ_q/n)^t)`, i.e. `ln(a_{1,t}/n^t - |K|/|G|)` without cancellation.
pub(crate) fn ln_trivial_excess(spec: &Spectrum, t: f64) -> f64 {
    let ln_n = (spec.n as f64).ln();
    let terms = spec.levels.iter().filter(|l| l.gamma > 0.0).map(|l| {
        let ln_ratio = if t == 0.0 {
            0.0
        } else {
            t * (l.gamma.ln() - ln_n)
        };
        (l.size as f64).ln() + ln_ratio
    });
    log_sum_exp(terms) - (spec.group_order as f64).ln()
}

/// `a_{1,t}`, the multiplicity of the trivial character, from level sizes alone.
pub fn trivial_multiplicity(spec: &Spectrum, t: f64) -> Result<Multiplicity> {
    check_t(t)?;
    let base = spec.kernel.order as f64 / spec.group_order as f64;
    Ok(Multiplicity::new(
        t,
        spec.n,
        base + ln_trivial_excess(spec, t).exp(),
    ))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CurveSample {
    pub target_index: usize,
    pub grid: Vec<f64>,
    pub normalized: Vec<f64>,
    pub raw: Vec<Option<f64>>,
}

impl CurveSample {
    /// CSV with header `t,normalized,raw`; overflowing raw values are written as `inf`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,normalized,raw\n");
        for ((t, y), raw) in self.grid.iter().zip(&self.normalized).zip(&self.raw) {
            let raw = raw.map_or_else(|| "inf".to_string(), |r| format!("{r:?}"));
            out.push_str(&format!("{t:?},{y:?},{raw}\n"));
        }
        out
    }
}

/// Samples `a_{i,t}/n^t` over an ascending grid. Grid points are evaluated in parallel.
pub fn mult_curve(
    ct: &CharacterTable,
    spec: &Spectrum,
    profile: &MultiplicityProfile,
    grid: &[f64],
    tol: &Tolerance,
) -> Result<CurveSample> {
    if let Some(&t) = grid.iter().find(|t| !(**t >= 0.0 && t.is_finite())) {
        return Err(Error::Domain(format!(
            "grid point {t} is not a finite nonnegative number"
        )));
    }
    if grid.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::Domain("grid must be strictly ascending".into()));
    }
    let points = grid
        .par_iter()
        .map(|&t| multiplicity(ct, spec, profile, t, tol))
        .collect::<Result<Vec<_>>>()?;
    Ok(CurveSample {
        target_index: profile.target_index,
        grid: grid.to_vec(),
        normalized: points.iter().map(|m| m.normalized).collect(),
        raw: points.iter().map(|m| m.raw).collect(),
    })
}

/// `start, start + step, …` up to and including `stop` (within rounding).
pub fn t_range(start: f64, stop: f64, step: f64) -> Result<Vec<f64>> {
    if !(step > 0.0) || !start.is_finite() || !stop.is_finite() || stop < start {
        return Err(Error::Domain(format!(
            "invalid range {start}:{stop}:{step}"
        )));
    }
    let count = ((stop - start) / step + 1e-9).floor() as usize;
    // snap to 12 decimals so that 0:1:0.1 yields 0.3 rather than 0.30000000000000004
    Ok((0..=count)
        .map(|k| ((start + k as f64 * step) * 1e12).round() / 1e12)
        .collect())
}

/// `a_{i,t}/n^t` for any pair of characters via class sums, including degenerate `χ`.
pub fn class_sum_profile(
    ct: &CharacterTable,
    chi: usize,
    t: f64,
    tol: &Tolerance,
) -> Result<Vec<Multiplicity>> {
    let n = ct.dimension(chi);
    (0..ct.num_characters())
        .map(|i| {
            Ok(Multiplicity::new(
                t,
                n,
                class_sum_multiplicity(ct, chi, i, t, tol)?,
            ))
        })
        .collect()
}
