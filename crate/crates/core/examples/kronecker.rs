// Decomposes `χ ⊗ χ̄` for every nonlinear character of every bundled table.

use charratio::algebraics::Tolerance;
use charratio::analysis::{kronecker_bounds, kronecker_coeffs};
use charratio::fixtures;
use charratio::spectrum::value_levels;

pub fn run() -> charratio::Result<()> {
    let tol = Tolerance::default();
    for ct in fixtures::all() {
        for chi in 0..ct.num_characters() {
            let Ok(spec) = value_levels(&ct, chi, &tol) else {
                continue;
            };
            let k = kronecker_coeffs(&ct, &spec, &tol)?;
            let b = kronecker_bounds(&ct, &spec, &tol)?;
            let terms: Vec<String> = k
                .targets
                .iter()
                .zip(&k.coefficients)
                .filter(|(_, a)| **a > 0)
                .map(|(&i, a)| format!("{a}·{}", ct.character(i).name))
                .collect();
            println!(
                "{} {}: {}  (Σa² = {}, gamma = {:.4} in [{:.4}, {:.4}])",
                ct.group_name(),
                ct.character(chi).name,
                terms.join(" + "),
                k.sum_squares,
                spec.gamma(),
                b.lower,
                b.upper
            );
        }
    }
    Ok(())
}

fn main() -> charratio::Result<()> {
    run()
}
