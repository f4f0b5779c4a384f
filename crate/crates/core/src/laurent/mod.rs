//! Exact one-variable algebra: integer Laurent polynomials and truncated
//! rational power series, joined by the substitution `A = e^x`.

mod poly;
mod series;

pub use poly::{Display, LaurentPoly};
pub use series::{exp_substitute, format_rational, TruncSeries};
