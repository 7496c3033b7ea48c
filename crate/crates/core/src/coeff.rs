//! Exact coefficient rings for [`TruncatedSeries`](crate::series::TruncatedSeries).
//!
//! Two domains are provided: arbitrary-precision integers ([`BigInt`]) and
//! integer polynomials in a marker variable `a` ([`PolyA`]). The latter keeps
//! the `a`-grading of a bivariate generating function intact, so individual
//! `a^m` slices can be compared against a combinatorial count.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A commutative ring with exact arithmetic.
pub trait Coefficient: Clone + PartialEq + fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(v: i64) -> Self;
    fn add_in_place(&mut self, rhs: &Self);
    fn sub_in_place(&mut self, rhs: &Self);
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;

    /// `Some(1)` or `Some(-1)` when the value is a unit sign, so hot loops
    /// can replace a multiplication by an addition.
    fn unit_sign(&self) -> Option<i8> {
        None
    }
}

impl Coefficient for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn add_in_place(&mut self, rhs: &Self) {
        *self += rhs;
    }
    fn sub_in_place(&mut self, rhs: &Self) {
        *self -= rhs;
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn unit_sign(&self) -> Option<i8> {
        if One::is_one(self) {
            Some(1)
        } else if self.is_negative() && One::is_one(&-self) {
            Some(-1)
        } else {
            None
        }
    }
}

/// Integer polynomial in the marker variable `a`, stored densely by
/// `a`-exponent with trailing zeros trimmed. Negative `a`-exponents cannot be
/// represented.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PolyA {
    coeffs: Vec<BigInt>,
}

impl PolyA {
    /// The marker `a` itself.
    pub fn a() -> Self {
        Self::monomial(BigInt::from(1), 1)
    }

    pub fn constant(c: BigInt) -> Self {
        Self::monomial(c, 0)
    }

    pub fn monomial(c: BigInt, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::from(0); degree + 1];
        coeffs[degree] = c;
        let mut p = PolyA { coeffs };
        p.trim();
        p
    }

    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut p = PolyA { coeffs };
        p.trim();
        p
    }

    /// Coefficient of `a^m` (zero above the degree).
    pub fn coeff(&self, m: usize) -> BigInt {
        self.coeffs.get(m).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Evaluate at `a = value` (Horner).
    pub fn eval(&self, value: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::from(0), |acc, c| acc * value + c)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }
}

impl fmt::Debug for PolyA {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(c) {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match m {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*a")?,
                _ => write!(f, "{c}*a^{m}")?,
            }
        }
        Ok(())
    }
}

impl Coefficient for PolyA {
    fn zero() -> Self {
        PolyA::default()
    }
    fn one() -> Self {
        PolyA::constant(BigInt::from(1))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn from_i64(v: i64) -> Self {
        PolyA::constant(BigInt::from(v))
    }
    fn add_in_place(&mut self, rhs: &Self) {
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::from(0));
        }
        for (l, r) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *l += r;
        }
        self.trim();
    }
    fn sub_in_place(&mut self, rhs: &Self) {
        if rhs.coeffs.len() > self.coeffs.len() {
            self.coeffs.resize(rhs.coeffs.len(), BigInt::from(0));
        }
        for (l, r) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *l -= r;
        }
        self.trim();
    }
    fn times(&self, rhs: &Self) -> Self {
        if self.coeffs.is_empty() || rhs.coeffs.is_empty() {
            return PolyA::default();
        }
        let mut out = vec![BigInt::from(0); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, l) in self.coeffs.iter().enumerate() {
            if Zero::is_zero(l) {
                continue;
            }
            for (j, r) in rhs.coeffs.iter().enumerate() {
                out[i + j] += l * r;
            }
        }
        PolyA::from_coeffs(out)
    }
    fn negated(&self) -> Self {
        PolyA {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
    fn unit_sign(&self) -> Option<i8> {
        match self.coeffs.as_slice() {
            [c] => c.unit_sign(),
            _ => None,
        }
    }
}
