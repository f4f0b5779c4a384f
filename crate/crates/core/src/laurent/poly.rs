use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

/// Laurent polynomial in one variable with arbitrary-precision integer
/// coefficients, stored sparsely by degree. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i32, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, degree: i32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(degree, c);
        }
        Self { terms }
    }

    /// The variable itself raised to `degree`.
    pub fn var_pow(degree: i32) -> Self {
        Self::monomial(1, degree)
    }

    /// Builds a polynomial from `(degree, coefficient)` pairs; repeated degrees accumulate.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (k, c) in terms {
            p.add_term(k, c.into());
        }
        p
    }

    /// `sigma = A + 1 + A^-1`.
    pub fn sigma() -> Self {
        Self::from_terms([(1, 1), (0, 1), (-1, 1)])
    }

    /// `sigma - sigma^2`, the value of the planar theta-curve.
    pub fn theta_value() -> Self {
        let s = Self::sigma();
        &s - &(&s * &s)
    }

    /// `(-A)^k`, reading negative `k` as `(-A^-1)^(-k)`.
    pub fn neg_var_pow(k: i32) -> Self {
        let c = if k.rem_euclid(2) == 0 { 1 } else { -1 };
        Self::monomial(c, k)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&0).is_some_and(|c| c.is_one())
    }

    pub fn coeff(&self, degree: i32) -> BigInt {
        self.terms.get(&degree).cloned().unwrap_or_default()
    }

    pub fn min_degree(&self) -> Option<i32> {
        self.terms.keys().next().copied()
    }

    pub fn max_degree(&self) -> Option<i32> {
        self.terms.keys().next_back().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending degree order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i32, &BigInt)> {
        self.terms.iter().map(|(&k, c)| (k, c))
    }

    pub fn add_term(&mut self, degree: i32, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(degree) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Multiplies by `A^k`.
    pub fn shift(&self, k: i32) -> Self {
        Self {
            terms: self.terms.iter().map(|(&d, c)| (d + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(&d, x)| (d, x * c)).collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Replaces the variable by its inverse: the degree-k coefficient moves to degree -k.
    pub fn substitute_inverse(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|(&d, c)| (-d, c.clone())).collect(),
        }
    }

    /// Replaces `A` by `A^k` for a nonzero `k`.
    pub fn substitute_power(&self, k: i32) -> Self {
        assert!(k != 0, "substitute_power needs a nonzero exponent");
        Self {
            terms: self.terms.iter().map(|(&d, c)| (d * k, c.clone())).collect(),
        }
    }

    /// Value at `A = 1`, the sum of all coefficients.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Exact quotient `self / q`, failing with `NotDivisible` when `q` does not divide.
    pub fn div_exact(&self, q: &LaurentPoly) -> Result<LaurentPoly, Error> {
        let (q_lo, q_hi) = match (q.min_degree(), q.max_degree()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(Error::NotDivisible),
        };
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let lead = &q.terms[&q_hi];
        let mut rem = self.clone();
        let mut quot = Self::zero();
        let p_lo = self.min_degree().unwrap();
        // Long division from the top; every quotient degree is at least p_lo - q_lo.
        while let Some(top) = rem.max_degree() {
            let shift = top - q_hi;
            if shift < p_lo - q_lo {
                return Err(Error::NotDivisible);
            }
            let (c, r) = rem.terms[&top].div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (&d, qc) in &q.terms {
                rem.add_term(d + shift, -(qc * &c));
            }
            quot.add_term(shift, c);
        }
        Ok(quot)
    }

    /// Largest `k` with `q^k` dividing `self`; zero when `q` does not divide.
    pub fn divisibility_order(&self, q: &LaurentPoly) -> u32 {
        assert!(!self.is_zero() && !q.is_zero(), "divisibility_order needs nonzero operands");
        // A unit q divides everything; report zero rather than looping forever.
        if q.len() == 1 && q.terms.values().next().is_some_and(|c| c.abs().is_one()) {
            return 0;
        }
        let mut k = 0;
        let mut cur = self.clone();
        while let Ok(next) = cur.div_exact(q) {
            k += 1;
            cur = next;
        }
        k
    }

    /// Renders with the given variable name, e.g. `-z^10 + z^8 + z^2`.
    pub fn display<'a>(&'a self, var: &'a str) -> Display<'a> {
        Display { poly: self, var }
    }

    /// Parses the textual form produced by [`LaurentPoly::display`].
    pub fn parse(text: &str, var: &str) -> Result<Self, Error> {
        let bad = |msg: &str| Error::Parse(format!("polynomial `{text}`: {msg}"));
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        // Split before every sign that does not follow `^`.
        let mut terms: Vec<&str> = Vec::new();
        let mut begin = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if matches!(bytes[i], b'+' | b'-') && bytes[i - 1] != b'^' {
                terms.push(&compact[begin..i]);
                begin = i;
            }
        }
        terms.push(&compact[begin..]);
        let mut out = Self::zero();
        for term in terms {
            let (negative, body) = match term.as_bytes()[0] {
                b'+' => (false, &term[1..]),
                b'-' => (true, &term[1..]),
                _ => (false, term),
            };
            let (coef, degree) = parse_term(body, var).ok_or_else(|| bad("malformed term"))?;
            out.add_term(degree, if negative { -coef } else { coef });
        }
        Ok(out)
    }
}

fn parse_term(term: &str, var: &str) -> Option<(BigInt, i32)> {
    if term.is_empty() {
        return None;
    }
    let Some(pos) = term.find(var) else {
        return Some((term.parse().ok()?, 0));
    };
    let coef_part = &term[..pos];
    let coef = if coef_part.is_empty() {
        BigInt::one()
    } else {
        coef_part.strip_suffix('*')?.parse().ok()?
    };
    let after = &term[pos + var.len()..];
    let degree = if after.is_empty() {
        1
    } else {
        after.strip_prefix('^')?.parse().ok()?
    };
    Some((coef, degree))
}

pub struct Display<'a> {
    poly: &'a LaurentPoly,
    var: &'a str,
}

impl fmt::Display for Display<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return f.write_str("0");
        }
        for (i, (&d, c)) in self.poly.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = c.abs();
            if d == 0 {
                write!(f, "{abs}")?;
                continue;
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            f.write_str(self.var)?;
            if d != 1 {
                write!(f, "^{d}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("A"))
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display("A"))
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&d, c) in &rhs.terms {
            self.add_term(d, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&d, c) in &rhs.terms {
            self.add_term(d, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&a, x) in &self.terms {
            for (&b, y) in &rhs.terms {
                out.add_term(a + b, x * y);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(&d, c)| (d, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        let mut acc = LaurentPoly::zero();
        for p in iter {
            acc += &p;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    #[test]
    fn sigma_times_zero() {
        assert!((&LaurentPoly::sigma() * &LaurentPoly::zero()).is_zero());
    }

    #[test]
    fn theta_value_expands() {
        let expected = p(&[(2, -1), (1, -1), (0, -2), (-1, -1), (-2, -1)]);
        assert_eq!(LaurentPoly::theta_value(), expected);
    }

    #[test]
    fn difference_of_squares() {
        let a = p(&[(0, 1), (1, -1)]);
        let b = p(&[(0, 1), (1, 1)]);
        assert_eq!(&a * &b, p(&[(0, 1), (2, -1)]));
    }

    #[test]
    fn zero_coefficients_vanish() {
        let a = p(&[(3, 2), (1, 1)]);
        let diff = &a - &a;
        assert!(diff.is_zero());
        assert_eq!(diff.len(), 0);
    }

    #[test]
    fn exact_division() {
        let t = LaurentPoly::theta_value();
        assert_eq!(t.div_exact(&t).unwrap(), LaurentPoly::one());
        let q = -&t;
        let prod = &q * &LaurentPoly::var_pow(3);
        assert_eq!(prod.div_exact(&q).unwrap(), LaurentPoly::var_pow(3));
        let a_plus_1 = p(&[(1, 1), (0, 1)]);
        let a_minus_1 = p(&[(1, 1), (0, -1)]);
        assert!(matches!(a_plus_1.div_exact(&a_minus_1), Err(Error::NotDivisible)));
    }

    #[test]
    fn division_rejects_fractional_quotient() {
        let two_a = p(&[(1, 2)]);
        assert!(p(&[(1, 1)]).div_exact(&two_a).is_err());
    }

    #[test]
    fn divisibility_orders() {
        let one_minus_a = p(&[(0, 1), (1, -1)]);
        let x = &one_minus_a.pow(3) * &p(&[(1, 1), (0, 2)]);
        assert_eq!(x.divisibility_order(&one_minus_a), 3);
        assert_eq!(p(&[(5, 1)]).divisibility_order(&one_minus_a), 0);
    }

    #[test]
    fn inverse_substitution() {
        assert_eq!(p(&[(2, 1), (0, 3)]).substitute_inverse(), p(&[(-2, 1), (0, 3)]));
        let s = LaurentPoly::sigma();
        assert_eq!(s.substitute_inverse(), s);
    }

    #[test]
    fn neg_var_powers() {
        assert_eq!(LaurentPoly::neg_var_pow(0), LaurentPoly::one());
        assert_eq!(LaurentPoly::neg_var_pow(3), p(&[(3, -1)]));
        assert_eq!(LaurentPoly::neg_var_pow(-3), p(&[(-3, -1)]));
        assert_eq!(LaurentPoly::neg_var_pow(-2), p(&[(-2, 1)]));
    }

    #[test]
    fn renders_descending() {
        let x = p(&[(10, -1), (8, 1), (2, 1)]);
        assert_eq!(x.display("z").to_string(), "-z^10 + z^8 + z^2");
        let y = p(&[(1, 3), (0, -2), (-3, 1), (-1, -1)]);
        assert_eq!(y.display("A").to_string(), "3*A - 2 - A^-1 + A^-3");
        assert_eq!(LaurentPoly::zero().display("A").to_string(), "0");
    }

    #[test]
    fn parses_rendered_text() {
        for text in ["-z^10 + z^8 + z^2", "3*z - 2 - z^-1 + z^-3", "0", "-7", "z"] {
            let q = LaurentPoly::parse(text, "z").unwrap();
            assert_eq!(q.display("z").to_string(), text);
        }
        assert!(LaurentPoly::parse("3*", "z").is_err());
        assert!(LaurentPoly::parse("z^", "z").is_err());
    }
}
