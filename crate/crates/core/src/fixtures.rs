//! Bundled character tables and permutation generators for small groups.

use crate::group::{load_generators, GeneratorSet};
use crate::table::{load_table, CharacterTable};

pub const A5_TOML: &str = include_str!("../fixtures/a5.toml");
pub const S3_TOML: &str = include_str!("../fixtures/s3.toml");
pub const S4_TOML: &str = include_str!("../fixtures/s4.toml");
pub const Q8_TOML: &str = include_str!("../fixtures/q8.toml");
pub const D5_TOML: &str = include_str!("../fixtures/d5.toml");
pub const TRIVIAL_TOML: &str = include_str!("../fixtures/trivial.toml");
pub const C3_JSON: &str = include_str!("../fixtures/c3.json");

pub const A5_GENERATORS: &str = include_str!("../fixtures/a5_gens.toml");
pub const S3_GENERATORS: &str = include_str!("../fixtures/s3_gens.toml");
pub const S4_GENERATORS: &str = include_str!("../fixtures/s4_gens.toml");
pub const Q8_GENERATORS: &str = include_str!("../fixtures/q8_gens.toml");
pub const D5_GENERATORS: &str = include_str!("../fixtures/d5_gens.toml");

fn table(text: &str) -> CharacterTable {
    load_table(text).expect("bundled table parses")
}

fn generators(text: &str) -> GeneratorSet {
    load_generators(text).expect("bundled generators parse")
}

pub fn a5() -> CharacterTable {
    table(A5_TOML)
}

pub fn s3() -> CharacterTable {
    table(S3_TOML)
}

pub fn s4() -> CharacterTable {
    table(S4_TOML)
}

pub fn q8() -> CharacterTable {
    table(Q8_TOML)
}

pub fn d5() -> CharacterTable {
    table(D5_TOML)
}

pub fn trivial() -> CharacterTable {
    table(TRIVIAL_TOML)
}

/// The cyclic group of order 3, whose table needs complex entries.
pub fn c3() -> CharacterTable {
    table(C3_JSON)
}

/// A5, S3, S4, Q8 and D5.
pub fn all() -> Vec<CharacterTable> {
    vec![a5(), s3(), s4(), q8(), d5()]
}

pub fn a5_generators() -> GeneratorSet {
    generators(A5_GENERATORS)
}

pub fn s3_generators() -> GeneratorSet {
    generators(S3_GENERATORS)
}

pub fn s4_generators() -> GeneratorSet {
    generators(S4_GENERATORS)
}

pub fn q8_generators() -> GeneratorSet {
    generators(Q8_GENERATORS)
}

pub fn d5_generators() -> GeneratorSet {
    generators(D5_GENERATORS)
}

/// Each bundled table paired with generators of the same group.
pub fn with_generators() -> Vec<(CharacterTable, GeneratorSet)> {
    vec![
        (a5(), a5_generators()),
        (s3(), s3_generators()),
        (s4(), s4_generators()),
        (q8(), q8_generators()),
        (d5(), d5_generators()),
    ]
}
