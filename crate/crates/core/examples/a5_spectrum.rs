// Level spectrum of the 3-dimensional character of A5 and the incidence
// numbers of every target character.

use charratio::algebraics::Tolerance;
use charratio::fixtures;
use charratio::spectrum::{incidence_numbers, value_levels};
use charratio::table::trivial_on_kernel;

pub fn run() -> charratio::Result<()> {
    let tol = Tolerance::default();
    let ct = fixtures::a5();
    let spec = value_levels(&ct, ct.character_index("chi3")?, &tol)?;
    println!(
        "n = {}, |G| = {}, |K| = {}, |C0| = {}, |G0| = {}",
        spec.n, spec.group_order, spec.kernel.order, spec.top_size, spec.zero_size
    );
    for (q, level) in spec.levels.iter().enumerate() {
        println!(
            "  gamma_{q} = {:<16} size {}",
            level.value.to_string(),
            level.size
        );
    }
    for i in trivial_on_kernel(&ct, &spec.kernel, &tol)? {
        let p = incidence_numbers(&ct, &spec, i, &tol)?;
        let lead = match (p.leading_q, p.leading_iota) {
            (Some(q), Some(iota)) => format!("leading term q={q}, iota={iota:.6}"),
            _ => "flat".to_string(),
        };
        println!(
            "  {:<6} iota = [{}]  {lead}",
            ct.character(i).name,
            p.exact_incidences.join(", ")
        );
    }
    Ok(())
}

fn main() -> charratio::Result<()> {
    run()
}
