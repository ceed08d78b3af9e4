// Limits, directions and rates of `a_{i,t}/n^t`, and the total `c(ρ)`.

use charratio::algebraics::Tolerance;
use charratio::analysis::asymptotics;
use charratio::fixtures;
use charratio::spectrum::{incidence_numbers, value_levels};
use charratio::table::trivial_on_kernel;

pub fn run() -> charratio::Result<()> {
    let tol = Tolerance::default();
    for ct in [fixtures::a5(), fixtures::s4(), fixtures::d5()] {
        for chi in 0..ct.num_characters() {
            let Ok(spec) = value_levels(&ct, chi, &tol) else {
                continue;
            };
            let profiles = trivial_on_kernel(&ct, &spec.kernel, &tol)?
                .into_iter()
                .map(|i| incidence_numbers(&ct, &spec, i, &tol))
                .collect::<charratio::Result<Vec<_>>>()?;
            let r = asymptotics(&ct, &spec, &profiles)?;
            println!(
                "{} {}: c(rho) = {:.6} <= {:.6}",
                ct.group_name(),
                ct.character(chi).name,
                r.c_rho,
                r.cauchy_schwarz_bound
            );
            for t in &r.targets {
                let rate = t.rate.map_or("-".into(), |r| format!("{r:.4}"));
                println!(
                    "  {:<8} -> {:.6} from {:<5} rate {rate}",
                    ct.character(t.target_index).name,
                    t.limit,
                    t.direction.to_string()
                );
            }
        }
    }
    Ok(())
}

fn main() -> charratio::Result<()> {
    run()
}
