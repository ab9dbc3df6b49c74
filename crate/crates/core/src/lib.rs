pub mod cli;
pub mod error;
pub mod fuzz;
pub mod matrix;
pub mod oracle;
pub mod polynomial;
pub mod scalar;
pub mod spectral;

pub use error::{Error, Result};
pub use matrix::Matrix;
pub use polynomial::Polynomial;
pub use scalar::Scalar;
