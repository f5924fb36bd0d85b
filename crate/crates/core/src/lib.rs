pub mod cli;
pub mod clifford;
pub mod convolve;
pub mod error;
pub mod evolution;
pub mod field;
pub mod relativistic;
pub mod spectral;
pub mod special;
pub mod transforms;

pub use error::{Error, Result};
pub use field::{Field, FieldResult, Warning};
