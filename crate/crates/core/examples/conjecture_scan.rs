// Checks every character pair of every bundled table for a nonzero incidence
// below the last level.

use charratio::algebraics::Tolerance;
use charratio::analysis::{conjecture_scan, CharacterScan};
use charratio::fixtures;

pub fn run() -> charratio::Result<()> {
    let tol = Tolerance::default();
    for ct in fixtures::all() {
        let report = conjecture_scan(&ct, &tol)?;
        let scanned = report
            .characters
            .iter()
            .filter(|(_, s)| matches!(s, CharacterScan::Scanned { .. }))
            .count();
        println!(
            "{:<3} {} characters scanned, {}",
            report.group,
            scanned,
            if report.holds() {
                "holds".to_string()
            } else {
                format!("candidates {:?}", report.counterexample_candidates())
            }
        );
    }
    println!(
        "{}",
        serde_json::to_string_pretty(&conjecture_scan(&fixtures::s3(), &tol)?).unwrap()
    );
    Ok(())
}

fn main() -> charratio::Result<()> {
    run()
}
