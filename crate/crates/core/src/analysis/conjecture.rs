//! Empirical scan: does every target have a nonzero incidence below the last level?

use serde::Serialize;

use super::multiplicity::{class_sum_multiplicity, limit_value};
use crate::algebraics::Tolerance;
use crate::error::{Error, Result};
use crate::spectrum::{incidence_numbers, value_levels};
use crate::table::{require_full_table, trivial_on_kernel, CharacterTable};

/// Exponents searched for a witness `a_{i,t} != (|K|/|G|) n^t n_i`.
pub const WITNESS_GRID: [f64; 8] = [0.0, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TargetScan {
    pub target_index: usize,
    /// Some `ι_{i,q}`, `q < l`, is nonzero.
    pub holds: bool,
    /// `|G/K|` does not divide `n² n_i`.
    pub indivisible: bool,
    /// First exponent in [`WITNESS_GRID`] where `a_{i,t}/n^t` differs from its limit.
    pub witness_t: Option<f64>,
    /// Every `C_q`, `q < l`, is a single class.
    pub single_classes: bool,
}

impl TargetScan {
    pub fn sufficient_condition(&self) -> bool {
        self.indivisible || self.witness_t.is_some() || self.single_classes
    }

    /// No nonzero incidence although the spectrum has more than one level.
    pub fn counterexample_candidate(&self, levels: usize) -> bool {
        !self.holds && levels > 1
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum CharacterScan {
    Linear,
    Degenerate,
    Scanned {
        levels: usize,
        /// Only the trivial character is trivial on `K`.
        vacuous: bool,
        targets: Vec<TargetScan>,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConjectureReport {
    pub group: String,
    pub characters: Vec<(usize, CharacterScan)>,
}

impl ConjectureReport {
    pub fn counterexample_candidates(&self) -> Vec<(usize, usize)> {
        self.characters
            .iter()
            .filter_map(|(i, scan)| match scan {
                CharacterScan::Scanned {
                    levels, targets, ..
                } => Some(
                    targets
                        .iter()
                        .filter(|t| t.counterexample_candidate(*levels))
                        .map(|t| (*i, t.target_index))
                        .collect::<Vec<_>>(),
                ),
                _ => None,
            })
            .flatten()
            .collect()
    }

    pub fn holds(&self) -> bool {
        self.counterexample_candidates().is_empty()
    }
}

/// Scans every nonlinear character against every character trivial on its scalar subgroup.
pub fn conjecture_scan(ct: &CharacterTable, tol: &Tolerance) -> Result<ConjectureReport> {
    require_full_table(ct, tol)?;
    let mut characters = Vec::with_capacity(ct.num_characters());
    for chi in 0..ct.num_characters() {
        let spec = match value_levels(ct, chi, tol) {
            Ok(spec) => spec,
            Err(Error::LinearCharacter(_)) => {
                characters.push((chi, CharacterScan::Linear));
                continue;
            }
            Err(Error::DegenerateSpectrum(_)) => {
                characters.push((chi, CharacterScan::Degenerate));
                continue;
            }
            Err(e) => return Err(e),
        };
        let list = trivial_on_kernel(ct, &spec.kernel, tol)?;
        let quotient = spec.group_order / spec.kernel.order;
        let l = spec.last_level();
        let single_classes = spec.levels[..l].iter().all(|lvl| lvl.classes.len() == 1);
        let mut targets = Vec::with_capacity(list.len());
        for &i in &list {
            let profile = incidence_numbers(ct, &spec, i, tol)?;
            let limit = limit_value(&spec, profile.target_dim);
            let mut witness_t = None;
            for t in WITNESS_GRID {
                let value = class_sum_multiplicity(ct, chi, i, t, tol)?;
                if !tol.close(value, limit) {
                    witness_t = Some(t);
                    break;
                }
            }
            targets.push(TargetScan {
                target_index: i,
                holds: !profile.is_flat(),
                indivisible: (spec.n * spec.n * profile.target_dim) % quotient != 0,
                witness_t,
                single_classes,
            });
        }
        characters.push((
            chi,
            CharacterScan::Scanned {
                levels: spec.levels.len(),
                vacuous: list.len() == 1,
                targets,
            },
        ));
    }
    Ok(ConjectureReport {
        group: ct.group_name().to_string(),
        characters,
    })
}
