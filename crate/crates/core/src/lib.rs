//! Logarithmic series solutions of A-hypergeometric systems by perturbation
//! of fake exponents.

pub mod arrangement;
pub mod error;
pub mod exponents;
pub mod io;
pub mod lattice;
pub mod polyhedron;
pub mod problem;
pub mod rational;
pub mod series;
pub mod standard_pairs;
pub mod toric;
pub mod verifier;

pub use error::{Error, Result};
