// Load a character table, run the consistency checks and compare it with a
// permutation group enumerated from generators.

use charratio::algebraics::Tolerance;
use charratio::fixtures;
use charratio::group::{check_class_function, enumerate_generator_set, DEFAULT_CAP};
use charratio::table::validate_table;

pub fn run() -> charratio::Result<()> {
    let tol = Tolerance::default();
    for (ct, gens) in fixtures::with_generators() {
        let report = validate_table(&ct, &tol);
        println!(
            "{} (|G| = {}): {}",
            ct.group_name(),
            ct.order(),
            if report.passed() { "valid" } else { "INVALID" }
        );
        for c in &report.checks {
            println!("  {:<26} {} ({:.1e})", c.name, c.passed, c.max_residual);
        }
        let g = enumerate_generator_set(&gens, DEFAULT_CAP)?;
        let reps: Vec<String> = g
            .classes()
            .iter()
            .map(|c| g.elements()[c.representative].to_string())
            .collect();
        println!("  enumerated order {}, classes {:?}", g.order(), reps);
        println!(
            "  class sizes agree with table: {}",
            check_class_function(&g, &ct)?
        );
    }
    Ok(())
}

fn main() -> charratio::Result<()> {
    run()
}
