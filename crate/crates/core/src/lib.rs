pub mod error;
pub mod numerics;
pub mod polylog;
pub mod quadrature;
pub mod registry;
pub mod series;

pub use error::{Error, Result};
pub use num_complex::Complex64;
