// Exact arithmetic on character values written as quadratic surds.

use charratio::algebraics::{abs_value, equal_within, parse_value, pow_real, Tolerance};

pub fn run() -> charratio::Result<()> {
    let phi = parse_value("(1+sqrt(5))/2")?;
    let psi = parse_value("(1-sqrt(5))/2")?;
    println!("phi = {phi}, psi = {psi}");
    println!("phi + psi = {}", phi.add(&psi));
    println!("phi * psi = {}", phi.mul(&psi));
    println!("phi / psi = {}", phi.div(&psi)?);
    println!("|psi|     = {}", abs_value(&psi));
    println!("|psi|^2.5 = {:.12}", pow_real(&abs_value(&psi), 2.5)?);

    // approximate values mix in, and equality falls back to a tolerance
    let approx = parse_value("1.6180339887498949")?;
    println!(
        "{approx} ≈ phi: {}",
        equal_within(&approx, &phi, &Tolerance::default())
    );

    let z = parse_value("-1/2 + sqrt(3)/2 i")?;
    println!("z = {z}, |z|^2 = {}", z.norm_sqr());

    for bad in ["sqrt(-2)", "(1+", "3/0"] {
        println!("{bad:>8} -> {}", parse_value(bad).unwrap_err());
    }
    Ok(())
}

fn main() -> charratio::Result<()> {
    run()
}
