//! Alternating sums over crossing changes and the experiments built on them.

mod experiments;

pub use experiments::{theorem1_experiment, theorem2_experiment, TheoremReport};

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::diagram::{apply_nsign, Diagram, SignEntry};
use crate::error::{Error, Result};
use crate::laurent::{exp_substitute, LaurentPoly};
use crate::yamada::{yamada_normalized, yamada_raw};
use crate::yokota::yokota_normalized;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Invariant {
    /// `R~_A`, in `A`.
    Yamada,
    /// `P_z`, in `z`.
    Yokota,
}

impl Invariant {
    pub fn var(self) -> &'static str {
        match self {
            Invariant::Yamada => "A",
            Invariant::Yokota => "z",
        }
    }

    /// Normalized invariant of a θ-curve diagram.
    pub fn eval(self, d: &Diagram) -> Result<LaurentPoly> {
        match self {
            Invariant::Yamada => Ok(yamada_normalized(d)?.normalized),
            Invariant::Yokota => Ok(yokota_normalized(d)?.pz),
        }
    }
}

/// A rational-valued functional on one of the invariants.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoeffFunctional {
    /// Coefficient of `var^degree`.
    Poly { invariant: Invariant, degree: i32 },
    /// Coefficient of `x^index` after substituting `var = e^x`, truncated after `x^trunc`.
    Series { invariant: Invariant, index: usize, trunc: usize },
}

impl CoeffFunctional {
    pub fn invariant(&self) -> Invariant {
        match *self {
            CoeffFunctional::Poly { invariant, .. } | CoeffFunctional::Series { invariant, .. } => invariant,
        }
    }

    /// Reads `A^r`, `z^r` or `x^n`; the `x^n` form needs the invariant and truncation.
    pub fn parse(text: &str, invariant: Invariant, trunc: usize) -> Result<Self> {
        let bad = || Error::BadParameter(format!("coefficient `{text}` is not of the form A^r, z^r or x^n"));
        let (var, exp) = text.trim().split_once('^').ok_or_else(bad)?;
        match var {
            "A" | "z" => {
                let inv = if var == "A" { Invariant::Yamada } else { Invariant::Yokota };
                let degree = exp.parse().map_err(|_| bad())?;
                Ok(CoeffFunctional::Poly { invariant: inv, degree })
            }
            "x" => {
                let index: usize = exp.parse().map_err(|_| bad())?;
                if index > trunc {
                    return Err(Error::OrderExceeded { requested: index, order: trunc });
                }
                Ok(CoeffFunctional::Series { invariant, index, trunc })
            }
            _ => Err(bad()),
        }
    }

    /// Applies the functional to an already computed invariant polynomial.
    pub fn apply(&self, p: &LaurentPoly) -> Result<BigRational> {
        match *self {
            CoeffFunctional::Poly { degree, .. } => Ok(BigRational::from_integer(p.coeff(degree))),
            CoeffFunctional::Series { index, trunc, .. } => {
                Ok(exp_substitute(p, trunc).coefficient(index)?.clone())
            }
        }
    }
}

impl fmt::Display for CoeffFunctional {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            CoeffFunctional::Poly { invariant, degree } => write!(f, "{}^{}", invariant.var(), degree),
            CoeffFunctional::Series { invariant, index, .. } => {
                write!(f, "x^{} of {}(e^x)", index, invariant.var())
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FtRow {
    pub eps: Vec<SignEntry>,
    /// Number of `+` entries.
    pub plus: usize,
    pub invariant: LaurentPoly,
    pub value: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FtReport {
    pub diagram: String,
    pub crossings: Vec<usize>,
    pub functional: CoeffFunctional,
    pub value: BigRational,
    pub rows: Vec<FtRow>,
    /// Power of `1 - A` dividing `(sigma - sigma^2) R~(D|C)`; Yamada only, and
    /// `None` when that sum vanishes.
    pub divisibility: Option<u32>,
}

/// All `eps` in `{+,-}^n`, lexicographic with `+` first.
pub fn sign_vectors(n: usize) -> Vec<Vec<SignEntry>> {
    (0..1usize << n)
        .map(|bits| {
            (0..n)
                .map(|i| if bits >> (n - 1 - i) & 1 == 0 { SignEntry::Pos } else { SignEntry::Neg })
                .collect()
        })
        .collect()
}

fn sign_of(plus: usize) -> i32 {
    if plus.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn signed_invariants(d: &Diagram, c: &[usize], invariant: Invariant) -> Result<Vec<(Vec<SignEntry>, usize, LaurentPoly)>> {
    sign_vectors(c.len())
        .into_par_iter()
        .map(|eps| {
            let de = apply_nsign(d, c, &eps)?;
            let plus = eps.iter().filter(|&&e| e == SignEntry::Pos).count();
            Ok((eps, plus, invariant.eval(&de)?))
        })
        .collect()
}

/// `v(D|C) = sum_eps (-1)^#(+) v(D_eps)`, with the per-`eps` table.
pub fn alt_sum(d: &Diagram, c: &[usize], v: &CoeffFunctional) -> Result<FtReport> {
    let table = signed_invariants(d, c, v.invariant())?;
    let mut value = BigRational::zero();
    let mut total = LaurentPoly::zero();
    let mut rows = Vec::with_capacity(table.len());
    for (eps, plus, inv) in table {
        let x = v.apply(&inv)?;
        let sign = sign_of(plus);
        value += &x * BigRational::from_integer(BigInt::from(sign));
        total += &inv.scale(&BigInt::from(sign));
        rows.push(FtRow { eps, plus, invariant: inv, value: x });
    }
    let divisibility = (v.invariant() == Invariant::Yamada && !total.is_zero()).then(|| {
        (&LaurentPoly::theta_value() * &total).divisibility_order(&LaurentPoly::from_terms([(0, 1), (1, -1)]))
    });
    Ok(FtReport {
        diagram: d.name().to_string(),
        crossings: c.to_vec(),
        functional: *v,
        value,
        rows,
        divisibility,
    })
}

/// Alternating sum of a rational-valued function of the diagrams `D_eps`.
pub fn alt_sum_by<F>(d: &Diagram, c: &[usize], f: F) -> Result<BigRational>
where
    F: Fn(&Diagram) -> Result<BigRational> + Sync,
{
    let parts: Vec<BigRational> = sign_vectors(c.len())
        .into_par_iter()
        .map(|eps| {
            let plus = eps.iter().filter(|&&e| e == SignEntry::Pos).count();
            Ok(f(&apply_nsign(d, c, &eps)?)? * BigRational::from_integer(sign_of(plus).into()))
        })
        .collect::<Result<_>>()?;
    Ok(parts.into_iter().fold(BigRational::zero(), |a, b| a + b))
}

/// The alternating sum of whole invariant polynomials.
pub fn poly_alt_sum(d: &Diagram, c: &[usize], invariant: Invariant) -> Result<LaurentPoly> {
    Ok(signed_invariants(d, c, invariant)?
        .into_iter()
        .map(|(_, plus, p)| p.scale(&sign_of(plus).into()))
        .sum())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WitnessRecord {
    pub left: LaurentPoly,
    pub right: LaurentPoly,
}

/// Checks `(sigma - sigma^2) R~(D|C) = (-A)^m sum_delta prod_k G_k(delta_k) R(D_delta)`
/// over `delta` in `{-, 0, inf}^n`, with `m = n - 2s` of `D` with every crossing
/// of `C` made positive.
pub fn echain_witness(d: &Diagram, c: &[usize]) -> Result<WitnessRecord> {
    let left = &LaurentPoly::theta_value() * &poly_alt_sum(d, c, Invariant::Yamada)?;

    let all_plus = apply_nsign(d, c, &vec![SignEntry::Pos; c.len()])?;
    let (s, n) = all_plus.writhe_sums()?;
    let a_diff = LaurentPoly::from_terms([(1, 1), (-1, -1)]);
    let mut f_minus = Vec::with_capacity(c.len());
    for &k in c {
        let j = match d.classify_crossing(k)? {
            crate::diagram::CrossingKind::SelfCrossing => 4,
            crate::diagram::CrossingKind::NonSelfCrossing => -2,
        };
        f_minus.push(-(&LaurentPoly::one() - &LaurentPoly::var_pow(j)));
    }
    let deltas: Vec<Vec<SignEntry>> = (0..3usize.pow(c.len() as u32))
        .map(|mut code| {
            let mut v = vec![SignEntry::Neg; c.len()];
            for slot in v.iter_mut().rev() {
                *slot = [SignEntry::Neg, SignEntry::Zero, SignEntry::Inf][code % 3];
                code /= 3;
            }
            v
        })
        .collect();
    let terms: Vec<LaurentPoly> = deltas
        .into_par_iter()
        .map(|delta| {
            let mut weight = LaurentPoly::one();
            for (k, e) in delta.iter().enumerate() {
                let g = match e {
                    SignEntry::Neg => f_minus[k].clone(),
                    SignEntry::Zero => -a_diff.clone(),
                    _ => a_diff.clone(),
                };
                weight = &weight * &g;
            }
            Ok(&weight * &yamada_raw(&apply_nsign(d, c, &delta)?))
        })
        .collect::<Result<_>>()?;
    let right = &LaurentPoly::neg_var_pow(n - 2 * s) * &terms.into_iter().sum::<LaurentPoly>();
    if left != right {
        return Err(Error::WitnessMismatch(format!(
            "`{}` at crossings {:?}: left {} but right {}",
            d.name(),
            c,
            left,
            right
        )));
    }
    Ok(WitnessRecord { left, right })
}

/// Crossing subsets of size `k`: all of them when there are at most `limit`,
/// otherwise `limit` distinct ones drawn from a seeded generator.
pub fn sample_subsets(crossings: usize, k: usize, limit: usize, seed: u64) -> Vec<Vec<usize>> {
    if k > crossings {
        return Vec::new();
    }
    let total = binomial(crossings, k);
    if total <= limit as u128 {
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(k);
        fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() == k {
                out.push(cur.clone());
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(i + 1, n, k, cur, out);
                cur.pop();
            }
        }
        rec(0, crossings, k, &mut cur, &mut out);
        return out;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    while out.len() < limit {
        let mut s: Vec<usize> = sample(&mut rng, crossings, k).into_vec();
        s.sort_unstable();
        if seen.insert(s.clone()) {
            out.push(s);
        }
    }
    out
}

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

pub const SAMPLE_LIMIT: usize = 200;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub diagram: String,
    pub crossings: Vec<usize>,
    pub index: usize,
    pub coefficient: BigRational,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificateReport {
    pub invariant: Invariant,
    pub order: usize,
    pub trunc: usize,
    /// Number of `(diagram, subset)` pairs checked.
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl CertificateReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// For each diagram and each sampled `(n+1)`-subset `C`, checks that the
/// `e^x` series of the alternating sum has no terms of degree `<= n`.
pub fn order_certificate(
    diagrams: &[Diagram],
    n: usize,
    trunc: usize,
    invariant: Invariant,
    seed: u64,
) -> Result<CertificateReport> {
    if trunc < n {
        return Err(Error::OrderExceeded { requested: n, order: trunc });
    }
    let mut checked = 0;
    let mut violations = Vec::new();
    for d in diagrams {
        for c in sample_subsets(d.crossing_count(), n + 1, SAMPLE_LIMIT, seed) {
            let series = exp_substitute(&poly_alt_sum(d, &c, invariant)?, trunc);
            checked += 1;
            for index in 0..=n {
                let coefficient = series.coefficient(index)?;
                if !coefficient.is_zero() {
                    violations.push(Violation {
                        diagram: d.name().to_string(),
                        crossings: c.clone(),
                        index,
                        coefficient: coefficient.clone(),
                    });
                }
            }
        }
    }
    Ok(CertificateReport { invariant, order: n, trunc, checked, violations })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::catalog;

    #[test]
    fn sign_vector_order() {
        use SignEntry::*;
        assert_eq!(sign_vectors(2), vec![vec![Pos, Pos], vec![Pos, Neg], vec![Neg, Pos], vec![Neg, Neg]]);
        assert_eq!(sign_vectors(0), vec![Vec::<SignEntry>::new()]);
    }

    #[test]
    fn subsets() {
        assert_eq!(sample_subsets(4, 2, 200, 0).len(), 6);
        let big = sample_subsets(30, 3, 200, 7);
        assert_eq!(big.len(), 200);
        assert_eq!(big, sample_subsets(30, 3, 200, 7));
        assert!(sample_subsets(2, 3, 200, 0).is_empty());
    }

    #[test]
    fn v0_of_t5() {
        let d = catalog("T(5)").unwrap();
        let v = CoeffFunctional::Poly { invariant: Invariant::Yamada, degree: 0 };
        let r = alt_sum(&d, &[0, 1], &v).unwrap();
        assert_eq!(r.value, BigRational::from_integer(1.into()));
        assert_eq!(r.rows.len(), 4);
        assert!(r.divisibility.unwrap() >= 2);
    }

    #[test]
    fn functional_parsing() {
        let f = CoeffFunctional::parse("A^-3", Invariant::Yokota, 8).unwrap();
        assert_eq!(f, CoeffFunctional::Poly { invariant: Invariant::Yamada, degree: -3 });
        let g = CoeffFunctional::parse("x^2", Invariant::Yokota, 8).unwrap();
        assert_eq!(g, CoeffFunctional::Series { invariant: Invariant::Yokota, index: 2, trunc: 8 });
        assert!(matches!(
            CoeffFunctional::parse("x^9", Invariant::Yamada, 8),
            Err(Error::OrderExceeded { .. })
        ));
        assert!(CoeffFunctional::parse("q^1", Invariant::Yamada, 8).is_err());
    }
}
