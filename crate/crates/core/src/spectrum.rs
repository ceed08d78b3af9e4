//! Level structure of `|χ|` and incidence numbers against a target character.
//!
//! For a nonlinear irreducible `χ` of dimension `n`, the classes outside the
//! scalar subgroup `K` are grouped by the value of `|χ|` into level sets
//! `C_0, …, C_l` with `γ_0 > γ_1 > … > γ_l`. The incidence number
//! `ι_{i,q}` is the sum of `χ_i` over `C_q`.

use std::cmp::Ordering;

use serde::Serialize;

use crate::algebraics::{abs_value, equal_within, AlgebraicValue, Real, Tolerance};
use crate::error::{Error, Result};
use crate::table::{is_trivial_on, kernel_classes, CharacterTable, Kernel};

#[derive(Debug, Clone, PartialEq)]
pub struct Level {
    /// `γ_q`, exact when the table entries are.
    pub value: AlgebraicValue,
    /// `γ_q` as a float; exactly `0.0` for the vanishing level.
    pub gamma: f64,
    pub classes: Vec<usize>,
    /// `|C_q|`.
    pub size: u64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    pub char_index: usize,
    pub n: u64,
    pub group_order: u64,
    /// Strictly decreasing levels, `levels[0]` is the top level.
    pub levels: Vec<Level>,
    pub kernel: Kernel,
    /// `|G| - |K|`.
    pub c_size: u64,
    /// `|G_0|`, zero when `χ` has no zeros.
    pub zero_size: u64,
    /// `|C_0|`.
    pub top_size: u64,
}

impl Spectrum {
    /// `γ = γ_0`.
    pub fn gamma(&self) -> f64 {
        self.levels[0].gamma
    }

    /// Index `l` of the last level.
    pub fn last_level(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn has_zero_level(&self) -> bool {
        self.levels.last().is_some_and(|l| l.gamma == 0.0)
    }

    pub fn level_sizes(&self) -> Vec<u64> {
        self.levels.iter().map(|l| l.size).collect()
    }

    pub fn gammas(&self) -> Vec<f64> {
        self.levels.iter().map(|l| l.gamma).collect()
    }

    /// `γ_q / n` for every level.
    pub fn ratios(&self) -> Vec<f64> {
        self.levels
            .iter()
            .map(|l| l.gamma / self.n as f64)
            .collect()
    }

    pub fn kernel_order(&self) -> u64 {
        self.kernel.order
    }

    /// `|G| - |G_0| - |K|`, the size of the support of `|χ|` outside `K`.
    pub fn nonzero_size(&self) -> u64 {
        self.c_size - self.zero_size
    }

    /// `|C_0| + … + |C_q|`.
    pub fn cumulative_size(&self, q: usize) -> u64 {
        self.levels[..=q].iter().map(|l| l.size).sum()
    }
}

/// Groups the classes outside `K` by the value of `|χ_i|`.
pub fn value_levels(ct: &CharacterTable, i: usize, tol: &Tolerance) -> Result<Spectrum> {
    let n = ct.dimension(i);
    if n == 1 {
        return Err(Error::LinearCharacter(i));
    }
    let kernel = kernel_classes(ct, i, tol)?;
    let mut moduli: Vec<(usize, AlgebraicValue)> = (0..ct.num_classes())
        .filter(|&j| !kernel.contains(j))
        .map(|j| (j, abs_value(ct.value(i, j))))
        .collect();
    moduli.sort_by(|(ja, a), (jb, b)| b.re().cmp_value(a.re()).then(ja.cmp(jb)));

    let mut levels: Vec<Level> = Vec::new();
    for (j, m) in moduli {
        let size = ct.classes()[j].size;
        match levels.last_mut() {
            Some(level) if equal_within(&level.value, &m, tol) => {
                level.classes.push(j);
                level.size += size;
            }
            _ => {
                let gamma = m.re().to_f64();
                let gamma = if is_zero(&m, tol) { 0.0 } else { gamma };
                levels.push(Level {
                    value: m,
                    gamma,
                    classes: vec![j],
                    size,
                });
            }
        }
    }
    for level in &mut levels {
        level.classes.sort_unstable();
    }

    let Some(top) = levels.first() else {
        return Err(Error::DegenerateSpectrum(i));
    };
    if top.gamma == 0.0 {
        return Err(Error::DegenerateSpectrum(i));
    }
    if top.value.re().cmp_value(&Real::from_integer(n as i64)) != Ordering::Less {
        return Err(Error::InconsistentTable(format!(
            "|{}| reaches {} outside its scalar subgroup, dimension is {n}",
            ct.character(i).name,
            top.value
        )));
    }
    let top_size = top.size;
    let zero_size = levels
        .last()
        .filter(|l| l.gamma == 0.0)
        .map_or(0, |l| l.size);
    if zero_size == 0 {
        log::warn!(
            "{} has no zeros; its smallest level {} stands in for the vanishing level",
            ct.character(i).name,
            levels.last().expect("nonempty").value
        );
    }
    Ok(Spectrum {
        char_index: i,
        n,
        group_order: ct.order(),
        c_size: ct.order() - kernel.order,
        levels,
        kernel,
        zero_size,
        top_size,
    })
}

fn is_zero(v: &AlgebraicValue, tol: &Tolerance) -> bool {
    if v.is_exact() {
        v.is_zero()
    } else {
        v.modulus_f64() <= tol.abs_eps
    }
}

/// Incidence numbers of one target character against the levels of a spectrum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MultiplicityProfile {
    pub target_index: usize,
    /// `n_i = χ_i(1)`.
    pub target_dim: u64,
    /// Real parts of `ι_{i,q}`, `q = 0..=l`.
    pub incidences: Vec<f64>,
    /// Exact `ι_{i,q}` rendered as value literals.
    pub exact_incidences: Vec<String>,
    pub exact: bool,
    pub leading_q: Option<usize>,
    pub leading_iota: Option<f64>,
    pub leading_gamma: Option<f64>,
    /// Largest `|Im ι_{i,q}|`, `q < l`.
    pub imag_residual: f64,
    /// `| |K| n_i + Σ_q ι_{i,q} |` for nontrivial targets, `0` for the trivial one.
    pub sum_residual: f64,
}

impl MultiplicityProfile {
    /// No nonzero incidence below the last level.
    pub fn is_flat(&self) -> bool {
        self.leading_q.is_none()
    }
}

/// `ι_{i,q} = Σ_{c ⊂ C_q} |c| χ_i(c)`, with the reality and sum checks.
pub fn incidence_numbers(
    ct: &CharacterTable,
    spec: &Spectrum,
    target: usize,
    tol: &Tolerance,
) -> Result<MultiplicityProfile> {
    if !is_trivial_on(ct, target, &spec.kernel, tol) {
        return Err(Error::NotTrivialOnKernel {
            target,
            source_char: spec.char_index,
        });
    }
    let n_i = ct.dimension(target);
    let values: Vec<AlgebraicValue> = spec
        .levels
        .iter()
        .map(|level| {
            level
                .classes
                .iter()
                .fold(AlgebraicValue::zero(), |acc, &j| {
                    acc.add(&ct.value(target, j).scale(ct.classes()[j].size as i64))
                })
        })
        .collect();
    let l = spec.last_level();
    let exact = values.iter().all(AlgebraicValue::is_exact);
    let scale = (ct.order() * n_i) as f64;
    let negligible = |x: f64| x.abs() <= tol.abs_eps + tol.rel_eps * scale;

    let imag_residual = values[..l]
        .iter()
        .map(|v| {
            if v.im().is_zero() {
                0.0
            } else {
                v.im().to_f64().abs()
            }
        })
        .fold(0.0, f64::max);
    if !negligible(imag_residual) {
        return Err(Error::InconsistentProfile {
            target,
            detail: format!("incidence has imaginary part {imag_residual:e}"),
        });
    }

    let is_trivial = ct.trivial_index() == Some(target);
    let sum_residual = if is_trivial {
        0.0
    } else {
        let total = values.iter().fold(
            AlgebraicValue::from_integer((spec.kernel.order * n_i) as i64),
            |acc, v| acc.add(v),
        );
        if total.is_exact() && total.is_zero() {
            0.0
        } else {
            total.modulus_f64()
        }
    };
    if !negligible(sum_residual) {
        return Err(Error::InconsistentProfile {
            target,
            detail: format!("|K| n_i + Σ ι = {sum_residual:e}, expected 0"),
        });
    }

    let incidences: Vec<f64> = values.iter().map(|v| v.re().to_f64()).collect();
    let leading_q = (0..l).find(|&q| {
        if values[q].is_exact() {
            !values[q].re().is_zero()
        } else {
            !negligible(incidences[q])
        }
    });
    Ok(MultiplicityProfile {
        target_index: target,
        target_dim: n_i,
        exact_incidences: values.iter().map(|v| v.to_string()).collect(),
        exact,
        leading_q,
        leading_iota: leading_q.map(|q| incidences[q]),
        leading_gamma: leading_q.map(|q| spec.levels[q].gamma),
        incidences,
        imag_residual,
        sum_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebraics::parse_value;
    use crate::fixtures;
    use crate::table::trivial_on_kernel;

    fn tol() -> Tolerance {
        Tolerance::default()
    }

    fn v(s: &str) -> AlgebraicValue {
        parse_value(s).unwrap()
    }

    #[test]
    fn a5_three_dimensional_levels() {
        let spec = value_levels(&fixtures::a5(), 1, &tol()).unwrap();
        let values: Vec<&AlgebraicValue> = spec.levels.iter().map(|l| &l.value).collect();
        assert_eq!(
            values,
            vec![&v("(1+sqrt(5))/2"), &v("1"), &v("(sqrt(5)-1)/2"), &v("0")]
        );
        assert_eq!(spec.level_sizes(), vec![12, 15, 12, 20]);
        assert_eq!(spec.kernel.order, 1);
        assert_eq!(spec.top_size, 12);
        assert_eq!(spec.zero_size, 20);
        assert_eq!(spec.n, 3);
    }

    #[test]
    fn a5_five_dimensional_levels() {
        let spec = value_levels(&fixtures::a5(), 4, &tol()).unwrap();
        assert_eq!(spec.levels.len(), 2);
        assert_eq!(spec.levels[0].value, v("1"));
        assert_eq!(spec.level_sizes(), vec![35, 24]);
        assert_eq!(
            (spec.top_size, spec.zero_size, spec.kernel.order),
            (35, 24, 1)
        );
    }

    #[test]
    fn q8_is_degenerate() {
        assert!(matches!(
            value_levels(&fixtures::q8(), 4, &tol()),
            Err(Error::DegenerateSpectrum(4))
        ));
    }

    #[test]
    fn linear_characters_are_rejected() {
        assert!(matches!(
            value_levels(&fixtures::a5(), 0, &tol()),
            Err(Error::LinearCharacter(0))
        ));
    }

    #[test]
    fn decimal_tables_group_by_tolerance() {
        let text = fixtures::A5_TOML
            .replace("\"(1+sqrt(5))/2\"", "\"1.618033988749895\"")
            .replace("\"(1-sqrt(5))/2\"", "\"-0.6180339887498949\"");
        let ct = crate::table::load_table(&text).unwrap();
        let spec = value_levels(&ct, 1, &tol()).unwrap();
        assert_eq!(spec.level_sizes(), vec![12, 15, 12, 20]);
        // both 3-dim characters carry 1.618 on one 5-class; levels stay separate from 1
        let spec = value_levels(&ct, 2, &tol()).unwrap();
        assert_eq!(spec.level_sizes(), vec![12, 15, 12, 20]);
    }

    #[test]
    fn missing_zero_level_is_tolerated() {
        // the 2-dim character of S3 with its zero replaced: no longer a character,
        // but the level machinery must still behave deterministically
        let text = fixtures::S3_TOML.replace("[\"2\", \"0\", \"-1\"]", "[\"2\", \"1/2\", \"-1\"]");
        let ct = crate::table::load_table(&text).unwrap();
        let spec = value_levels(&ct, 2, &tol()).unwrap();
        assert!(!spec.has_zero_level());
        assert_eq!(spec.zero_size, 0);
        assert_eq!(spec.level_sizes(), vec![2, 3]);
    }

    #[test]
    fn a5_incidences_for_five_dimensional_target() {
        let ct = fixtures::a5();
        let spec = value_levels(&ct, 1, &tol()).unwrap();
        let p = incidence_numbers(&ct, &spec, 4, &tol()).unwrap();
        assert_eq!(p.incidences, vec![0.0, 15.0, 0.0, -20.0]);
        assert_eq!(p.leading_q, Some(1));
        assert_eq!(p.leading_iota, Some(15.0));
        assert_eq!(p.leading_gamma, Some(1.0));
        assert_eq!(p.sum_residual, 0.0);
    }

    #[test]
    fn a5_incidences_for_trivial_target_are_level_sizes() {
        let ct = fixtures::a5();
        let spec = value_levels(&ct, 1, &tol()).unwrap();
        let p = incidence_numbers(&ct, &spec, 0, &tol()).unwrap();
        assert_eq!(p.incidences, vec![12.0, 15.0, 12.0, 20.0]);
    }

    #[test]
    fn a5_incidences_for_other_three_dimensional_target() {
        let ct = fixtures::a5();
        let spec = value_levels(&ct, 1, &tol()).unwrap();
        let p = incidence_numbers(&ct, &spec, 2, &tol()).unwrap();
        assert_eq!(
            p.exact_incidences,
            vec!["6-6*sqrt(5)", "-15", "6+6*sqrt(5)", "0"]
        );
        assert_eq!(p.leading_q, Some(0));
        assert!(p.leading_iota.unwrap() < 0.0);
        assert!((p.leading_iota.unwrap() - (6.0 - 6.0 * 5f64.sqrt())).abs() < 1e-12);
        assert_eq!(p.sum_residual, 0.0);
    }

    #[test]
    fn target_must_be_trivial_on_kernel() {
        let ct = fixtures::s4();
        let chi2 = ct.character_index("chi2").unwrap();
        let spec = value_levels(&ct, chi2, &tol()).unwrap();
        assert_eq!(spec.kernel.order, 4);
        let std = ct.character_index("std").unwrap();
        assert!(matches!(
            incidence_numbers(&ct, &spec, std, &tol()),
            Err(Error::NotTrivialOnKernel { .. })
        ));
    }

    #[test]
    fn corrupted_table_gives_inconsistent_profile() {
        let ct = crate::table::load_table(&fixtures::A5_TOML.replace(
            "[\"4\", \"0\", \"1\", \"-1\", \"-1\"]",
            "[\"4\", \"0\", \"1\", \"-1\", \"1\"]",
        ))
        .unwrap();
        let spec = value_levels(&ct, 1, &tol()).unwrap();
        assert!(matches!(
            incidence_numbers(&ct, &spec, 3, &tol()),
            Err(Error::InconsistentProfile { target: 3, .. })
        ));
    }

    #[test]
    fn partition_reality_and_sum_identity_on_fixtures() {
        let t = tol();
        for ct in fixtures::all() {
            for i in 0..ct.num_characters() {
                let Ok(spec) = value_levels(&ct, i, &t) else {
                    continue;
                };
                assert_eq!(
                    spec.level_sizes().iter().sum::<u64>() + spec.kernel.order,
                    ct.order()
                );
                for w in spec.levels.windows(2) {
                    assert!(w[0].gamma > w[1].gamma);
                }
                assert!(spec.gamma() < spec.n as f64);
                for target in trivial_on_kernel(&ct, &spec.kernel, &t).unwrap() {
                    let p = incidence_numbers(&ct, &spec, target, &t).unwrap();
                    assert!(p.exact);
                    assert_eq!(p.imag_residual, 0.0);
                    assert_eq!(p.sum_residual, 0.0);
                    if target == 0 {
                        let sizes: Vec<f64> =
                            spec.level_sizes().iter().map(|&s| s as f64).collect();
                        assert_eq!(p.incidences, sizes);
                    }
                    for (q, level) in spec.levels.iter().enumerate() {
                        if let [j] = level.classes[..] {
                            let single = ct.value(target, j).scale(level.size as i64);
                            assert_eq!(p.exact_incidences[q], single.to_string());
                        }
                    }
                }
            }
        }
    }
}
