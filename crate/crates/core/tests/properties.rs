mod common;

use common::*;
use proptest::prelude::*;
use thetapoly::diagram::{apply_nsign, connected_sum, mirror, simplify, switch_crossing, twist_theta, SignEntry};
use thetapoly::finitetype::{poly_alt_sum, Invariant};
use thetapoly::laurent::LaurentPoly;
use thetapoly::yamada::{yamada_normalized, yamada_raw};
use thetapoly::yokota::{yokota_bracket, yokota_normalized};

proptest! {
    #![proptest_config(config(200, 0x5eed_0001))]

    #[test]
    fn ring_axioms(p in arb_poly(), q in arb_poly(), r in arb_poly()) {
        check_ring(&p, &q, &r)?;
    }

    #[test]
    fn exp_is_a_ring_morphism(p in arb_poly(), q in arb_poly(), order in 0usize..10) {
        check_exp_morphism(&p, &q, order)?;
    }

    #[test]
    fn parse_display_round_trip(p in arb_poly()) {
        prop_assert_eq!(LaurentPoly::parse(&p.display("A").to_string(), "A").unwrap(), p.clone());
        prop_assert_eq!(p.substitute_inverse().substitute_inverse(), p);
    }
}

proptest! {
    #![proptest_config(config(120, 0x5eed_0002))]

    #[test]
    fn operations_stay_planar(d in arb_diagram(12, true)) {
        check_planar(&d)?;
        let (s, _) = simplify(&d);
        check_planar(&s)?;
        prop_assert!(s.crossing_count() <= d.crossing_count());
    }

    #[test]
    fn mirror_is_an_involution(d in arb_diagram(12, true)) {
        prop_assert_eq!(mirror(&mirror(&d)).with_name(d.name()), d);
    }

    #[test]
    fn evaluators_agree(d in arb_diagram(9, true), perm in 0usize..6, last in any::<bool>()) {
        let orders = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        check_order_independence(&d, orders[perm], last)?;
    }

    #[test]
    fn alt_sum_linear_and_symmetric(
        d in arb_diagram(8, false),
        picks in prop::collection::vec(any::<usize>(), 1..4),
        a in -5i64..5, b in -5i64..5, k1 in -8i32..8, k2 in -8i32..8,
    ) {
        check_alt_sum(&d, &picks, a, b, k1, k2)?;
    }

    #[test]
    fn skein_relations(d in arb_diagram(9, false), i in any::<usize>()) {
        prop_assume!(d.crossing_count() > 0);
        let c = i % d.crossing_count();
        let at = |e| apply_nsign(&d, &[c], &[e]).unwrap();
        let a_diff = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
        let lhs = &yamada_raw(&at(SignEntry::Pos)) - &yamada_raw(&at(SignEntry::Neg));
        let rhs = &a_diff * &(&yamada_raw(&at(SignEntry::Zero)) - &yamada_raw(&at(SignEntry::Inf)));
        prop_assert_eq!(lhs, rhs);
        let lhs = &yokota_bracket(&at(SignEntry::Pos)).unwrap().shift(1) - &yokota_bracket(&at(SignEntry::Neg)).unwrap().shift(-1);
        let rhs = &LaurentPoly::from_terms([(3, 1), (-3, -1)]) * &yokota_bracket(&at(SignEntry::Zero)).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normalized_invariants(d in arb_diagram(8, false), e in arb_diagram(6, false)) {
        prop_assume!(d.is_theta() && e.is_theta());
        let sum = connected_sum(&d, &e).unwrap();
        let (rd, re) = (yamada_normalized(&d).unwrap().normalized, yamada_normalized(&e).unwrap().normalized);
        prop_assert_eq!(yamada_normalized(&sum).unwrap().normalized, &rd * &re);
        let (pd, pe) = (yokota_normalized(&d).unwrap().pz, yokota_normalized(&e).unwrap().pz);
        prop_assert_eq!(yokota_normalized(&sum).unwrap().pz, &pd * &pe);
        prop_assert_eq!(yamada_normalized(&mirror(&d)).unwrap().normalized, rd.substitute_inverse());
        prop_assert_eq!(yokota_normalized(&mirror(&d)).unwrap().pz, pd.substitute_inverse());
        prop_assert!(pd.terms().all(|(k, _)| k % 2 == 0));
    }

    #[test]
    fn alternating_sums_are_divisible(d in arb_diagram(8, false), picks in prop::collection::vec(any::<usize>(), 1..4)) {
        prop_assume!(d.is_theta() && d.crossing_count() > 0);
        let n = d.crossing_count();
        let mut c: Vec<usize> = picks.iter().map(|i| i % n).collect();
        c.sort_unstable();
        c.dedup();
        let total = &LaurentPoly::theta_value() * &poly_alt_sum(&d, &c, Invariant::Yamada).unwrap();
        prop_assert!(total.is_zero() || total.divisibility_order(&LaurentPoly::from_terms([(0, 1), (1, -1)])) >= c.len() as u32);
    }
}

proptest! {
    #![proptest_config(config(100, 0x5eed_0003))]

    #[test]
    fn switching_descends_the_twist_family(k in 1i64..5, seed in any::<u64>()) {
        let d = twist_theta(2 * k + 1).unwrap();
        let p = (seed % (k as u64 + 1)) as usize;
        let mut order: Vec<usize> = (0..d.crossing_count()).collect();
        let mut s = seed;
        for i in (1..order.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let mut e = d.clone();
        for &c in &order[..p] {
            e = switch_crossing(&e, c).unwrap();
        }
        let (reduced, _) = simplify(&e);
        let (expected, _) = simplify(&twist_theta(2 * k + 1 - 2 * p as i64).unwrap());
        prop_assert_eq!(reduced.crossing_count(), expected.crossing_count());
        prop_assert_eq!(reduced.canonical_key(), expected.canonical_key());
    }
}
