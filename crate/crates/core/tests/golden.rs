use num_rational::BigRational;
use thetapoly::diagram::{catalog, connected_sum, mirror, simplify, switch_crossing, twist_theta, Diagram};
use thetapoly::finitetype::{theorem1_experiment, theorem2_experiment, Invariant};
use thetapoly::laurent::{exp_substitute, LaurentPoly};
use thetapoly::Error;

fn poly(text: &str, var: &str) -> LaurentPoly {
    LaurentPoly::parse(text, var).unwrap()
}

fn yamada(d: &Diagram) -> LaurentPoly {
    Invariant::Yamada.eval(d).unwrap()
}

fn yokota(d: &Diagram) -> LaurentPoly {
    Invariant::Yokota.eval(d).unwrap()
}

#[test]
fn sigma_values() {
    assert_eq!(LaurentPoly::theta_value(), poly("-A^2 - A - 2 - A^-1 - A^-2", "A"));
    assert_eq!(LaurentPoly::sigma(), poly("A + 1 + A^-1", "A"));
}

#[test]
fn catalog_values() {
    let t3 = catalog("T(3)").unwrap();
    assert_eq!(yamada(&t3), poly("A^-2 + A^-5 - A^-7 + A^-8 - A^-9 - A^-10 + A^-11", "A"));
    assert_eq!(yokota(&t3), poly("z^-4 + z^-8 - z^-12", "z"));
    assert_eq!(yokota(&catalog("theta_3_1").unwrap()), poly("z^2 + z^8 - z^10", "z"));
    let r51 = yamada(&catalog("theta_5_1").unwrap());
    assert_eq!(
        r51,
        poly("A^10 - 2*A^9 - 2*A^8 + 6*A^7 - 2*A^6 - 6*A^5 + 8*A^4 + A^3 - 7*A^2 + 3*A + 3 - 3*A^-1 + A^-3", "A")
    );
    assert_eq!(exp_substitute(&r51, 0).coefficient(0).unwrap(), &BigRational::from_integer(1.into()));
    assert!(yamada(&catalog("trivial").unwrap()).is_one());
    assert!(yokota(&catalog("trivial").unwrap()).is_one());
}

#[test]
fn twist_family_degrees() {
    for n in 1..=4 {
        let r = yamada(&twist_theta(2 * n as i64 + 1).unwrap());
        assert_eq!((r.min_degree(), r.max_degree()), (Some(-(8 * n + 3)), Some(-2 * n)), "n = {n}");
    }
    for n in 1..=3 {
        let p = yokota(&twist_theta(2 * n as i64 + 1).unwrap());
        assert_eq!((p.min_degree(), p.max_degree()), (Some(-(8 * n + 4)), Some(-4 * n)), "n = {n}");
    }
}

#[test]
fn g_has_min_degree_one() {
    let g = connected_sum(&mirror(&twist_theta(5).unwrap()), &catalog("theta_5_1").unwrap()).unwrap();
    assert_eq!(yamada(&g).min_degree(), Some(1));
}

#[test]
fn switched_twist_collapses() {
    let d = switch_crossing(&catalog("T(3)").unwrap(), 1).unwrap();
    let (reduced, _) = simplify(&d);
    assert_eq!(reduced.crossing_count(), 0);
    let (fixed, log) = simplify(&catalog("theta_3_1").unwrap());
    assert_eq!(fixed.crossing_count(), 3);
    assert!(log.is_empty());
}

#[test]
fn sum_with_trivial_is_identity() {
    let d = catalog("theta_5_1").unwrap();
    let e = connected_sum(&d, &catalog("trivial").unwrap()).unwrap();
    assert_eq!(e.canonical_key(), d.canonical_key());
    assert_eq!(yamada(&e), yamada(&d));
}

#[test]
fn theorem_experiments() {
    for (r, n) in [(0, 1), (1, 1), (0, 2)] {
        for report in [theorem1_experiment(r, n, 40).unwrap(), theorem2_experiment(r, n, 40).unwrap()] {
            assert!(report.nonzero() && report.selection_independent(), "r = {r}, n = {n}");
            assert_eq!(report.main.value, BigRational::from_integer(1.into()));
        }
    }
    assert!(matches!(theorem1_experiment(1, 1, 10), Err(Error::BudgetExceeded { .. })));
}
