//! Yamada polynomial of θ-curve diagrams.
//!
//! Each crossing is resolved three ways: the A-smoothing (weight `A`), the
//! B-smoothing (weight `A^-1`) and a 4-valent vertex (weight 1). The
//! resulting planar graphs are evaluated by the graph polynomial `h`.

mod frontier;
mod hpoly;
mod statesum;

pub use frontier::frontier_sum;
pub use hpoly::{canonical_code, h_poly, HCache, Multigraph};
pub use statesum::{state_sum, underlying_graph};

use crate::diagram::{simplify, Diagram, Move};
use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct YamadaValue {
    pub raw: LaurentPoly,
    pub normalized: LaurentPoly,
    pub s: i32,
    pub n: i32,
}

/// Factor by which a removed feature multiplied the raw value.
pub fn move_factor(mv: Move) -> LaurentPoly {
    match mv {
        Move::Kink { sign } => LaurentPoly::var_pow(2 * sign as i32),
        Move::Bigon => LaurentPoly::one(),
        Move::VertexTwist { sign } => LaurentPoly::monomial(-1, -(sign as i32)),
        Move::SplitCircle => LaurentPoly::sigma(),
    }
}

/// `R_A(D)`; kinks, bigons and vertex twists are stripped first.
pub fn yamada_raw(d: &Diagram) -> LaurentPoly {
    let (reduced, log) = simplify(d);
    log.into_iter()
        .fold(frontier_sum(&reduced), |acc, mv| &acc * &move_factor(mv))
}

/// `R~_A(D) = (-A)^(n - 2s) R_A(D) / (sigma - sigma^2)`.
pub fn yamada_normalized(d: &Diagram) -> Result<YamadaValue> {
    if !d.is_theta() {
        return Err(Error::Validation(format!(
            "`{}` is not a θ-curve diagram without extra circles",
            d.name()
        )));
    }
    let (s, n) = d.writhe_sums()?;
    let raw = yamada_raw(d);
    let normalized = (&raw * &LaurentPoly::neg_var_pow(n - 2 * s)).div_exact(&LaurentPoly::theta_value())?;
    Ok(YamadaValue { raw, normalized, s, n })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::catalog;

    #[test]
    fn trivial_theta() {
        let d = catalog("trivial").unwrap();
        assert_eq!(yamada_raw(&d), LaurentPoly::theta_value());
        assert_eq!(state_sum(&d), LaurentPoly::theta_value());
        assert!(yamada_normalized(&d).unwrap().normalized.is_one());
    }

    #[test]
    fn evaluators_agree_on_catalog() {
        for name in ["T(1)", "T(3)", "theta_3_1", "theta_5_1"] {
            let d = catalog(name).unwrap();
            let reference = state_sum(&d);
            assert_eq!(frontier_sum(&d), reference, "{name}");
            assert_eq!(yamada_raw(&d), reference, "{name}");
        }
    }
}
