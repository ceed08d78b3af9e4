//! Exit criteria. Each test prints one `criterion N: PASS|FAIL` line; run with
//! `cargo test --test acceptance -- --nocapture --test-threads=1` to see them all.

use std::time::{Duration, Instant};

use charratio::algebraics::{parse_value, Tolerance};
use charratio::analysis::*;
use charratio::fixtures;
use charratio::group::{enumerate_group, parse_permutation, DEFAULT_CAP};
use charratio::spectrum::{incidence_numbers, value_levels, Spectrum};
use charratio::table::{kernel_classes, trivial_on_kernel, CharacterTable};
use charratio::Error;

fn tol() -> Tolerance {
    Tolerance::default()
}

fn verdict(n: u32, checks: &[(String, bool)]) {
    let passed = checks.iter().all(|c| c.1);
    let detail: Vec<String> = checks
        .iter()
        .map(|(what, ok)| format!("{}{what}", if *ok { "" } else { "[FAIL] " }))
        .collect();
    println!(
        "criterion {n}: {} — {}",
        if passed { "PASS" } else { "FAIL" },
        detail.join("; ")
    );
    assert!(passed, "criterion {n} failed: {}", detail.join("; "));
}

fn check(what: impl Into<String>, ok: bool) -> (String, bool) {
    (what.into(), ok)
}

fn spectrum(ct: &CharacterTable, name: &str) -> Spectrum {
    value_levels(ct, ct.character_index(name).unwrap(), &tol()).unwrap()
}

/// Nonlinear characters with a level spectrum.
fn spectra(ct: &CharacterTable) -> Vec<Spectrum> {
    (0..ct.num_characters())
        .filter_map(|i| value_levels(ct, i, &tol()).ok())
        .collect()
}

#[test]
fn criterion_01_a5_three_dim_spectrum() {
    let start = Instant::now();
    let ct = fixtures::a5();
    let spec = spectrum(&ct, "chi3");
    let elapsed = start.elapsed();
    let gamma = &spec.levels[0].value;
    verdict(
        1,
        &[
            check(format!("n = {}", spec.n), spec.n == 3),
            check(
                format!("|G| = {}", spec.group_order),
                spec.group_order == 60,
            ),
            check(
                format!("|K| = {}", spec.kernel.order),
                spec.kernel.order == 1,
            ),
            check(format!("|C0| = {}", spec.top_size), spec.top_size == 12),
            check(format!("|G0| = {}", spec.zero_size), spec.zero_size == 20),
            check(
                format!("gamma = {gamma} (exact: {})", gamma.is_exact()),
                gamma.is_exact() && *gamma == parse_value("(1+sqrt(5))/2").unwrap(),
            ),
            check(
                format!("runtime {elapsed:?}"),
                elapsed < Duration::from_secs(1),
            ),
        ],
    );
}

#[test]
fn criterion_02_centralizer_interval() {
    let spec = spectrum(&fixtures::a5(), "chi3");
    let (lo, hi) = centerless_bounds(&spec).unwrap();
    let (want_lo, want_hi) = ((51.0f64 / 39.0).sqrt(), (51.0f64 / 12.0).sqrt());
    verdict(
        2,
        &[
            check(
                format!("lower {lo:.9} vs {want_lo:.9}"),
                (lo - want_lo).abs() <= 1e-9,
            ),
            check(
                format!("upper {hi:.9} vs {want_hi:.9}"),
                (hi - want_hi).abs() <= 1e-9,
            ),
            check(
                "rounds to [1.14, 2.06]",
                format!("{lo:.2}") == "1.14" && format!("{hi:.2}") == "2.06",
            ),
        ],
    );
}

#[test]
fn criterion_03_kronecker_interval() {
    let ct = fixtures::a5();
    let spec = spectrum(&ct, "chi3");
    let k = kronecker_bounds(&ct, &spec, &tol()).unwrap();
    let (want_lo, want_hi) = ((99.0f64 / 39.0).powf(0.25), (99.0f64 / 12.0).powf(0.25));
    verdict(
        3,
        &[
            check(
                format!("lower {:.9} vs {want_lo:.9}", k.lower),
                (k.lower - want_lo).abs() <= 1e-9,
            ),
            check(
                format!("upper {:.9} vs {want_hi:.9}", k.upper),
                (k.upper - want_hi).abs() <= 1e-9,
            ),
            check(
                "rounds to [1.26, 1.69]",
                format!("{:.2}", k.lower) == "1.26" && format!("{:.2}", k.upper) == "1.69",
            ),
            check(
                format!("sum of squares {}", k.sum_squares),
                k.sum_squares == 3,
            ),
        ],
    );
}

#[test]
fn criterion_04_five_dim_corner_case() {
    let ct = fixtures::a5();
    let spec = spectrum(&ct, "chi5");
    let (lo, hi) = centerless_bounds(&spec).unwrap();
    let k = kronecker_bounds(&ct, &spec, &tol()).unwrap();
    let one = |x: f64| (x - 1.0).abs() <= 1e-12;
    verdict(
        4,
        &[
            check(format!("centralizer [{lo}, {hi}]"), one(lo) && one(hi)),
            check(
                format!("kronecker [{}, {}]", k.lower, k.upper),
                one(k.lower) && one(k.upper),
            ),
            check(format!("|C0| = {}", spec.top_size), spec.top_size == 35),
            check(format!("|G0| = {}", spec.zero_size), spec.zero_size == 24),
            check(
                format!("sum of squares {}", k.sum_squares),
                k.sum_squares == 11,
            ),
        ],
    );
}

#[test]
fn criterion_05_curves() {
    let ct = fixtures::a5();
    let spec = spectrum(&ct, "chi3");
    let profile = |name: &str| {
        incidence_numbers(&ct, &spec, ct.character_index(name).unwrap(), &tol()).unwrap()
    };

    let grid = t_range(0.0, 8.0, 0.5).unwrap();
    let five = mult_curve(&ct, &spec, &profile("chi5"), &grid, &tol()).unwrap();
    let worst = five
        .grid
        .iter()
        .zip(&five.normalized)
        .map(|(t, y)| (y - (1.0 / 12.0 + 0.25 * 3f64.powf(-t))).abs())
        .fold(0.0, f64::max);

    let other = mult_curve(&ct, &spec, &profile("chi3p"), &[0.0, 1.0, 2.0, 3.0], &tol()).unwrap();
    let y = &other.normalized;
    let oracle_t1 = class_sum_multiplicity(&ct, 1, 2, 1.0, &tol()).unwrap();
    verdict(
        5,
        &[
            check(
                format!(
                    "chi5 closed form, max error {worst:e} over {} points",
                    grid.len()
                ),
                worst <= 1e-12,
            ),
            check(format!("chi3p at t=0: {:e}", y[0]), y[0].abs() <= 1e-12),
            check(format!("chi3p at t=2: {:e}", y[2]), y[2].abs() <= 1e-12),
            check(
                format!("chi3p at t=1: {} (class sum {oracle_t1})", y[1]),
                (y[1] + 1.0 / 30.0).abs() <= 1e-12 && (oracle_t1 + 1.0 / 30.0).abs() <= 1e-12,
            ),
            check(format!("chi3p at t=3: {:e}", y[3]), y[3] > 0.0),
        ],
    );
}

#[test]
fn criterion_06_identity_suites() {
    let t = tol();
    let mut remainder = 0.0f64;
    let mut sums = 0.0f64;
    let mut delta = 0.0f64;
    let mut floor_ok = true;
    let mut vacuous = Vec::new();
    let grid = t_range(0.0, 64.0, 0.25).unwrap();
    for ct in fixtures::all() {
        let specs = spectra(&ct);
        if specs.is_empty() {
            vacuous.push(ct.group_name().to_string());
        }
        for spec in &specs {
            for s in [0.5, 1.0, 2.0, 3.5, 7.0] {
                remainder = remainder.max(remainder_identity_check(spec, s).unwrap());
            }
            for i in trivial_on_kernel(&ct, &spec.kernel, &t).unwrap() {
                sums = sums.max(incidence_numbers(&ct, spec, i, &t).unwrap().sum_residual);
            }
        }
        for chi in 0..ct.num_characters() {
            let kernel = kernel_classes(&ct, chi, &t).unwrap();
            let list = trivial_on_kernel(&ct, &kernel, &t).unwrap();
            delta = delta.max(delta_k_residual(&ct, &kernel, &list));
            if ct.dimension(chi) == 1 {
                continue;
            }
            let floor = kernel.order as f64 / ct.order() as f64;
            for &s in &grid {
                // the class-sum route covers characters without a level spectrum
                let value = class_sum_multiplicity(&ct, chi, 0, s, &t).unwrap();
                floor_ok &= value >= floor * (1.0 - 1e-12);
            }
        }
        for spec in &specs {
            let floor = spec.kernel.order as f64 / ct.order() as f64;
            for &s in &grid {
                floor_ok &= trivial_multiplicity(spec, s).unwrap().normalized >= floor;
            }
        }
    }
    verdict(
        6,
        &[
            check(
                format!("remainder identity max residual {remainder:e}"),
                remainder <= 1e-10,
            ),
            check(
                format!("incidence sum identity max residual {sums:e}"),
                sums == 0.0,
            ),
            check(
                format!("delta_K identity max residual {delta:e}"),
                delta == 0.0,
            ),
            check("a_(1,t)/n^t >= |K|/|G| on [0, 64]", floor_ok),
            check(
                format!("no level spectrum (spectrum identities vacuous): {vacuous:?}"),
                true,
            ),
        ],
    );
}

#[test]
fn criterion_07_asymptotics() {
    let ct = fixtures::a5();
    let t = 64.0;
    let mut checks = Vec::new();
    for spec in spectra(&ct) {
        let name = &ct.character(spec.char_index).name;
        let n = spec.n as f64;
        let a1 = trivial_multiplicity(&spec, t).unwrap();
        let root = a1.raw.unwrap().powf(1.0 / t);
        checks.push(check(
            format!(
                "{name}: |a_(1,64)^(1/64) - n| = {:.4} vs {:.4}",
                (root - n).abs(),
                0.05 * n
            ),
            (root - n).abs() < 0.05 * n,
        ));
        let b = gamma_bounds(&spec, t).unwrap();
        let gaps = (b.gamma_ratio - b.lower, b.upper - b.gamma_ratio);
        checks.push(check(
            format!(
                "{name}: endpoint gaps to gamma/n {:.2e}, {:.2e}",
                gaps.0, gaps.1
            ),
            gaps.0.abs() < 1e-3 && gaps.1.abs() < 1e-3,
        ));
    }
    let spec = spectrum(&ct, "chi3");
    let profiles: Vec<_> = trivial_on_kernel(&ct, &spec.kernel, &tol())
        .unwrap()
        .into_iter()
        .map(|i| incidence_numbers(&ct, &spec, i, &tol()).unwrap())
        .collect();
    let report = asymptotics(&ct, &spec, &profiles).unwrap();
    checks.push(check(
        format!("c(rho) = {}", report.c_rho),
        (report.c_rho - 16.0 / 60.0).abs() <= 1e-15,
    ));
    checks.push(check(
        format!("c(rho) <= sqrt(5/60) = {:.6}", report.cauchy_schwarz_bound),
        report.c_rho <= (5.0f64 / 60.0).sqrt(),
    ));
    verdict(7, &checks);
}

#[test]
fn criterion_08_degenerate_character() {
    let ct = fixtures::q8();
    let chi = ct.character_index("chi2").unwrap();
    let result = value_levels(&ct, chi, &tol());
    let kernel = kernel_classes(&ct, chi, &tol()).unwrap();
    let list = trivial_on_kernel(&ct, &kernel, &tol()).unwrap();
    verdict(
        8,
        &[
            check(
                "2-dim character has a degenerate spectrum",
                matches!(result, Err(Error::DegenerateSpectrum(i)) if i == chi),
            ),
            check(format!("k = {}", list.len()), list.len() == 4),
        ],
    );
}

#[test]
fn criterion_09_group_oracle() {
    let start = Instant::now();
    let sorted = |mut v: Vec<u64>| {
        v.sort_unstable();
        v
    };
    let enumerate = |gens: &[&str], degree| {
        let gens: Vec<_> = gens
            .iter()
            .map(|g| parse_permutation(g, degree).unwrap())
            .collect();
        enumerate_group(&gens, DEFAULT_CAP).unwrap()
    };
    let a5 = enumerate(&["(1,2,3,4,5)", "(1,2)(3,4)"], 5);
    let s3 = enumerate(&["(1,2,3)", "(1,2)"], 3);
    let a5_sizes = sorted(a5.class_sizes().into_iter().map(|s| s as u64).collect());
    let s3_sizes = sorted(s3.class_sizes().into_iter().map(|s| s as u64).collect());
    let elapsed = start.elapsed();
    verdict(
        9,
        &[
            check(format!("A5 order {}", a5.order()), a5.order() == 60),
            check(
                format!("A5 class sizes {a5_sizes:?}"),
                a5_sizes == vec![1, 12, 12, 15, 20]
                    && a5_sizes == sorted(fixtures::a5().class_sizes()),
            ),
            check(format!("S3 order {}", s3.order()), s3.order() == 6),
            check(
                format!("S3 class sizes {s3_sizes:?}"),
                s3_sizes == sorted(fixtures::s3().class_sizes()),
            ),
            check(
                format!("runtime {elapsed:?}"),
                elapsed < Duration::from_secs(5),
            ),
        ],
    );
}

#[test]
fn criterion_10_even_integrality() {
    let t = tol();
    let mut worst = 0.0f64;
    let mut negative = false;
    let mut count = 0;
    for ct in fixtures::all() {
        for chi in 0..ct.num_characters() {
            for s in [2.0, 4.0, 6.0] {
                for m in class_sum_profile(&ct, chi, s, &t).unwrap() {
                    let raw = m.raw.unwrap();
                    worst = worst.max((raw - raw.round()).abs());
                    negative |= raw.round() < 0.0;
                    count += 1;
                }
            }
        }
        for spec in spectra(&ct) {
            for i in trivial_on_kernel(&ct, &spec.kernel, &t).unwrap() {
                let p = incidence_numbers(&ct, &spec, i, &t).unwrap();
                for s in [2.0, 4.0, 6.0] {
                    let raw = multiplicity(&ct, &spec, &p, s, &t).unwrap().raw.unwrap();
                    worst = worst.max((raw - raw.round()).abs());
                    negative |= raw.round() < 0.0;
                    count += 1;
                }
            }
        }
    }
    verdict(
        10,
        &[
            check(
                format!("{count} values, max distance to an integer {worst:e}"),
                worst <= 1e-6,
            ),
            check("all nonnegative", !negative),
        ],
    );
}
