// Closes a set of permutations under composition and splits the result into
// conjugacy classes.

use charratio::group::{enumerate_group, parse_permutation, DEFAULT_CAP};

pub fn run() -> charratio::Result<()> {
    for (name, degree, gens) in [
        ("A5", 5, &["(1,2,3,4,5)", "(1,2)(3,4)"][..]),
        ("S4", 4, &["(1,2,3,4)", "(1,2)"][..]),
        ("M", 6, &["(1,2,3)(4,5,6)", "(1,4)"][..]),
    ] {
        let gens = gens
            .iter()
            .map(|g| parse_permutation(g, degree))
            .collect::<charratio::Result<Vec<_>>>()?;
        let g = enumerate_group(&gens, DEFAULT_CAP)?;
        println!("{name}: order {}", g.order());
        for c in g.classes() {
            println!(
                "  {:>4} × {:<16} cycle type {:?}",
                c.size(),
                g.elements()[c.representative].to_string(),
                c.cycle_type
            );
        }
    }
    Ok(())
}

fn main() -> charratio::Result<()> {
    run()
}
