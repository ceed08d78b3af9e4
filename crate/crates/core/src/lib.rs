pub mod algebraics;
pub mod analysis;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod group;
pub mod spectrum;
pub mod table;

pub use error::{Error, Result};
