//! Yamada and Yokota polynomials of θ-curve diagrams, their `e^x` expansions,
//! and finite-type tests built from alternating sums over crossing changes.

pub mod diagram;
pub mod error;
pub mod finitetype;
pub mod laurent;
pub mod yamada;
pub mod yokota;

pub use error::{Error, Result};
