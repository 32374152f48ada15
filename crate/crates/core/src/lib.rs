//! Multiple polylogarithms, hyperlogarithms, Dirichlet L-values and
//! numerical Mahler measures for a collection of two- to five-variable
//! polynomial families.

pub mod error;
pub mod formulas;
pub mod numerics;
pub mod dirichlet;
pub mod hyperlog;
pub mod mahler;
pub mod polylog;
pub mod script_l;

pub use error::{Error, Result};
pub use numerics::ValueWithError;
