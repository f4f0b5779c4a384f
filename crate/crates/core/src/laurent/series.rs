use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::LaurentPoly;
use crate::error::Error;

/// Power series in `x` truncated after degree `order`, with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TruncSeries {
    coeffs: Vec<BigRational>,
}

impl TruncSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); order + 1],
        }
    }

    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a series keeps at least the constant term");
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Exact coefficient of `x^n`.
    pub fn coefficient(&self, n: usize) -> Result<&BigRational, Error> {
        self.coeffs.get(n).ok_or(Error::OrderExceeded {
            requested: n,
            order: self.order(),
        })
    }

    /// Number of leading zero coefficients (the whole length when the series vanishes).
    pub fn valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    fn zip_with(&self, rhs: &Self, f: impl Fn(&BigRational, &BigRational) -> BigRational) -> Self {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        Self {
            coeffs: (0..n).map(|i| f(&self.coeffs[i], &rhs.coeffs[i])).collect(),
        }
    }
}

/// Substitutes `A = e^x` and truncates after `x^order`.
///
/// The monomial `c*A^k` contributes `c * k^i / i!` to the coefficient of `x^i`.
pub fn exp_substitute(p: &LaurentPoly, order: usize) -> TruncSeries {
    let mut factorial = BigInt::one();
    let mut coeffs = Vec::with_capacity(order + 1);
    for i in 0..=order {
        if i > 0 {
            factorial *= BigInt::from(i);
        }
        let numer: BigInt = p
            .terms()
            .map(|(k, c)| c * BigInt::from(k).pow(i as u32))
            .sum();
        coeffs.push(BigRational::new(numer, factorial.clone()));
    }
    TruncSeries { coeffs }
}

impl Add for &TruncSeries {
    type Output = TruncSeries;
    fn add(self, rhs: &TruncSeries) -> TruncSeries {
        self.zip_with(rhs, |a, b| a + b)
    }
}

impl Sub for &TruncSeries {
    type Output = TruncSeries;
    fn sub(self, rhs: &TruncSeries) -> TruncSeries {
        self.zip_with(rhs, |a, b| a - b)
    }
}

impl Mul for &TruncSeries {
    type Output = TruncSeries;
    fn mul(self, rhs: &TruncSeries) -> TruncSeries {
        let n = self.coeffs.len().min(rhs.coeffs.len());
        let mut coeffs = vec![BigRational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate().take(n) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(n - i) {
                coeffs[i + j] += a * b;
            }
        }
        TruncSeries { coeffs }
    }
}

/// Renders a rational as `p/q`, or just `p` for integers.
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn constant_series() {
        let s = exp_substitute(&LaurentPoly::one(), 5);
        assert_eq!(s.order(), 5);
        assert_eq!(s.coefficient(0).unwrap(), &q(1, 1));
        assert!(s.coeffs()[1..].iter().all(Zero::is_zero));
    }

    #[test]
    fn exponential_of_a() {
        let s = exp_substitute(&LaurentPoly::var_pow(1), 3);
        assert_eq!(s.coeffs(), &[q(1, 1), q(1, 1), q(1, 2), q(1, 6)]);
    }

    #[test]
    fn one_minus_a_squared() {
        let one_minus_a = LaurentPoly::from_terms([(0, 1), (1, -1)]);
        let s = exp_substitute(&one_minus_a.pow(2), 3);
        assert_eq!(s.coeffs(), &[q(0, 1), q(0, 1), q(1, 1), q(1, 1)]);
    }

    #[test]
    fn coefficient_lookup() {
        let s = exp_substitute(&LaurentPoly::var_pow(1), 4);
        assert_eq!(s.coefficient(2).unwrap(), &q(1, 2));
        let c = exp_substitute(&LaurentPoly::one(), 4);
        assert!(c.coefficient(3).unwrap().is_zero());
        assert!(matches!(c.coefficient(5), Err(Error::OrderExceeded { .. })));
    }

    #[test]
    fn rational_rendering() {
        assert_eq!(format_rational(&q(-3, 6)), "-1/2");
        assert_eq!(format_rational(&q(4, 2)), "2");
    }
}
