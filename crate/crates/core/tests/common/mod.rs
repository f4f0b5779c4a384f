#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};
use thetapoly::diagram::{apply_nsign, catalog, connected_sum, is_planar, mirror, switch_crossing, Diagram, SignEntry};
use thetapoly::finitetype::alt_sum_by;
use thetapoly::laurent::{exp_substitute, LaurentPoly};
use thetapoly::yamada::{frontier_sum, state_sum, yamada_raw};
use thetapoly::yokota::{yokota_bracket, Bracket, Pick, Traversal};

pub const SMALL: [&str; 6] = ["trivial", "T(1)", "T(3)", "T(5)", "theta_3_1", "theta_5_1"];

pub fn config(cases: u32, seed: u64) -> Config {
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

pub fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-6i32..=6, -20i64..=20), 0..6)
        .prop_map(LaurentPoly::from_terms)
}

#[derive(Clone, Copy, Debug)]
pub enum Op {
    Mirror,
    Switch(usize),
    Sum(usize),
    Smooth(usize),
}

fn arb_op() -> impl Strategy<Value = Op> {
    prop_oneof![
        Just(Op::Mirror),
        any::<usize>().prop_map(Op::Switch),
        (0..SMALL.len()).prop_map(Op::Sum),
        any::<usize>().prop_map(Op::Smooth),
    ]
}

/// Applies `ops` in turn, skipping any that would exceed `max` crossings.
pub fn build(base: usize, ops: &[Op], max: usize, smoothing: bool) -> Diagram {
    let mut d = catalog(SMALL[base]).unwrap();
    for op in ops {
        let c = d.crossing_count();
        d = match *op {
            Op::Mirror => mirror(&d),
            Op::Switch(i) if c > 0 => switch_crossing(&d, i % c).unwrap(),
            Op::Sum(j) => {
                let other = catalog(SMALL[j]).unwrap();
                if c + other.crossing_count() > max || !d.is_theta() {
                    continue;
                }
                connected_sum(&d, &other).unwrap()
            }
            Op::Smooth(i) if smoothing && c > 0 => apply_nsign(&d, &[i % c], &[SignEntry::Zero]).unwrap(),
            _ => continue,
        };
    }
    d
}

/// Oriented diagrams obtained from the small catalog by mirrors, switches,
/// connected sums and, when `smoothing` is set, coherent smoothings.
pub fn arb_diagram(max: usize, smoothing: bool) -> impl Strategy<Value = Diagram> {
    (0..SMALL.len(), prop::collection::vec(arb_op(), 0..5))
        .prop_map(move |(base, ops)| build(base, &ops, max, smoothing))
}

pub fn check_ring(p: &LaurentPoly, q: &LaurentPoly, r: &LaurentPoly) -> Result<(), TestCaseError> {
    prop_assert_eq!(&(p + q) + r, p + &(q + r));
    prop_assert_eq!(&(p * q) * r, p * &(q * r));
    prop_assert_eq!(p + q, q + p);
    prop_assert_eq!(p * q, q * p);
    prop_assert_eq!(p * &(q + r), &(p * q) + &(p * r));
    prop_assert_eq!(p + &LaurentPoly::zero(), p.clone());
    prop_assert_eq!(p * &LaurentPoly::one(), p.clone());
    prop_assert!((p + &(-p)).is_zero());
    prop_assert_eq!(&(p + q) - q, p.clone());
    Ok(())
}

pub fn check_exp_morphism(p: &LaurentPoly, q: &LaurentPoly, order: usize) -> Result<(), TestCaseError> {
    let (ep, eq) = (exp_substitute(p, order), exp_substitute(q, order));
    prop_assert_eq!(exp_substitute(&(p * q), order), &ep * &eq);
    prop_assert_eq!(exp_substitute(&(p + q), order), &ep + &eq);
    let at_one = BigRational::from_integer(p.eval_one());
    prop_assert_eq!(ep.coefficient(0).unwrap(), &at_one);
    Ok(())
}

pub fn check_planar(d: &Diagram) -> Result<(), TestCaseError> {
    prop_assert!(is_planar(d), "{}", d.render());
    prop_assert!(d.check_structure().is_ok());
    // The text format carries no circle components.
    if d.strands().unwrap().circles.is_empty() {
        prop_assert_eq!(&Diagram::parse(&d.render()).unwrap(), d);
    }
    Ok(())
}

pub fn check_order_independence(d: &Diagram, edge_order: [u8; 3], last: bool) -> Result<(), TestCaseError> {
    if d.crossing_count() <= 7 {
        prop_assert_eq!(frontier_sum(d), state_sum(d));
    }
    let t = Traversal { edge_order, pick: if last { Pick::Last } else { Pick::First } };
    prop_assert_eq!(Bracket::new(t).eval(d).unwrap(), yokota_bracket(d).unwrap());
    Ok(())
}

/// `v(D|C)` is linear in `v` and symmetric in the order of `C`.
pub fn check_alt_sum(d: &Diagram, picks: &[usize], a: i64, b: i64, k1: i32, k2: i32) -> Result<(), TestCaseError> {
    let n = d.crossing_count();
    if n == 0 {
        return Ok(());
    }
    let mut c: Vec<usize> = picks.iter().map(|i| i % n).collect();
    c.sort_unstable();
    c.dedup();
    let coeff = |k: i32| move |e: &Diagram| Ok(BigRational::from_integer(yamada_raw(e).coeff(k)));
    let (ra, rb) = (BigRational::from_integer(BigInt::from(a)), BigRational::from_integer(BigInt::from(b)));
    let combined = {
        let (ra, rb) = (ra.clone(), rb.clone());
        alt_sum_by(d, &c, move |e| Ok(&ra * coeff(k1)(e)? + &rb * coeff(k2)(e)?)).unwrap()
    };
    let separate = ra * alt_sum_by(d, &c, coeff(k1)).unwrap() + rb * alt_sum_by(d, &c, coeff(k2)).unwrap();
    prop_assert_eq!(combined, separate);
    let reversed: Vec<usize> = c.iter().rev().copied().collect();
    prop_assert_eq!(alt_sum_by(d, &c, coeff(k1)).unwrap(), alt_sum_by(d, &reversed, coeff(k1)).unwrap());
    Ok(())
}
