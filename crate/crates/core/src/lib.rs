pub mod artinian;
pub mod complex;
pub mod error;
pub mod exactla;
pub mod inequalities;
pub mod lefschetz;
pub mod realization;
pub mod report;
pub mod rigidity;
pub mod seeds;
pub mod stress;

pub use error::{Error, Result};
