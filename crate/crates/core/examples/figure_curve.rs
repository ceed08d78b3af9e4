// Writes `a_{i,t}/n^t` for the 3-dimensional character of A5 as CSV, one
// column per target; plot it with any external tool.

use charratio::algebraics::Tolerance;
use charratio::analysis::{mult_curve, t_range};
use charratio::fixtures;
use charratio::spectrum::{incidence_numbers, value_levels};
use charratio::table::trivial_on_kernel;

pub fn run() -> charratio::Result<()> {
    let tol = Tolerance::default();
    let ct = fixtures::a5();
    let spec = value_levels(&ct, ct.character_index("chi3")?, &tol)?;
    let grid = t_range(0.0, 8.0, 0.25)?;
    let mut columns = Vec::new();
    for i in trivial_on_kernel(&ct, &spec.kernel, &tol)? {
        let p = incidence_numbers(&ct, &spec, i, &tol)?;
        columns.push((
            ct.character(i).name.clone(),
            mult_curve(&ct, &spec, &p, &grid, &tol)?,
        ));
    }
    let names: Vec<&str> = columns.iter().map(|c| c.0.as_str()).collect();
    println!("t,{}", names.join(","));
    for (k, t) in grid.iter().enumerate() {
        let row: Vec<String> = columns
            .iter()
            .map(|c| format!("{:.12}", c.1.normalized[k]))
            .collect();
        println!("{t},{}", row.join(","));
    }
    Ok(())
}

fn main() -> charratio::Result<()> {
    run()
}
