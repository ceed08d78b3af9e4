// How the bounds on the largest nontrivial character value tighten with `t`.

use charratio::algebraics::Tolerance;
use charratio::analysis::bounds_report;
use charratio::fixtures;
use charratio::spectrum::value_levels;

pub fn run() -> charratio::Result<()> {
    let tol = Tolerance::default();
    let ct = fixtures::a5();
    let spec = value_levels(&ct, ct.character_index("chi3")?, &tol)?;
    println!("gamma = {:.6}", spec.gamma());
    println!("{:>6} {:>10} {:>10}", "t", "lower", "upper");
    for t in [0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 64.0, 256.0] {
        let r = bounds_report(&ct, &spec, t, &tol)?;
        let n = spec.n as f64;
        println!(
            "{t:>6} {:>10.6} {:>10.6}",
            r.gamma_lower() * n,
            r.gamma_upper() * n
        );
    }
    let r = bounds_report(&ct, &spec, 2.0, &tol)?;
    if let Some((lo, hi)) = r.centerless_interval {
        println!("centralizer interval [{lo:.4}, {hi:.4}]");
    }
    if let Some(k) = r.kronecker {
        println!("kronecker interval   [{:.4}, {:.4}]", k.lower, k.upper);
    }
    Ok(())
}

fn main() -> charratio::Result<()> {
    run()
}
