//! Truncated formal Laurent series in `q` with exact coefficients.
//!
//! A [`TruncatedSeries`] stores the coefficients of `q^e` for `e` in
//! `[min_exp, order)`. Everything below `min_exp` is exactly zero, and nothing
//! is known at or above `order`. Arithmetic propagates the truncation order so
//! that every coefficient a series reports is exact.

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;

use crate::coeff::Coefficient;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
pub struct TruncatedSeries<C = BigInt> {
    min_exp: i64,
    order: i64,
    coeffs: Vec<C>,
}

impl<C: Coefficient> TruncatedSeries<C> {
    /// The zero series on `[min_exp, order)`. An inverted window is clamped to
    /// the empty window `[min_exp, min_exp)`.
    pub fn zero(min_exp: i64, order: i64) -> Self {
        let order = order.max(min_exp);
        TruncatedSeries {
            min_exp,
            order,
            coeffs: vec![C::zero(); (order - min_exp) as usize],
        }
    }

    /// The constant `1`, known below `order`.
    pub fn one(order: i64) -> Self {
        Self::monomial(C::one(), 0, order)
    }

    /// `c·q^exp` known below `order`. If `exp >= order` the result is the zero
    /// series with an empty window at `order`.
    pub fn monomial(c: C, exp: i64, order: i64) -> Self {
        if exp >= order {
            return Self::zero(order, order);
        }
        let mut s = Self::zero(exp, order);
        s.coeffs[0] = c;
        s
    }

    pub fn from_terms<I>(terms: I, min_exp: i64, order: i64) -> Result<Self>
    where
        I: IntoIterator<Item = (i64, C)>,
    {
        if order < min_exp {
            return Err(Error::InvalidWindow { min_exp, order });
        }
        let mut s = Self::zero(min_exp, order);
        for (e, c) in terms {
            let slot = s.slot_mut(e)?;
            slot.add_in_place(&c);
        }
        Ok(s)
    }

    /// Build from a dense coefficient vector starting at `min_exp`.
    pub fn from_dense(min_exp: i64, coeffs: Vec<C>) -> Self {
        let order = min_exp + coeffs.len() as i64;
        TruncatedSeries {
            min_exp,
            order,
            coeffs,
        }
    }

    pub fn min_exp(&self) -> i64 {
        self.min_exp
    }

    pub fn order(&self) -> i64 {
        self.order
    }

    /// Coefficients for exponents `min_exp..order`.
    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn coefficient(&self, n: i64) -> Result<&C> {
        if n < self.min_exp || n >= self.order {
            return Err(Error::OutOfWindow {
                exp: n,
                min_exp: self.min_exp,
                order: self.order,
            });
        }
        Ok(&self.coeffs[(n - self.min_exp) as usize])
    }

    /// Coefficient of `q^n` for any `n < order`; zero below the window.
    pub fn coefficient_or_zero(&self, n: i64) -> Result<C> {
        if n < self.min_exp && n < self.order {
            return Ok(C::zero());
        }
        self.coefficient(n).cloned()
    }

    fn slot_mut(&mut self, n: i64) -> Result<&mut C> {
        if n < self.min_exp || n >= self.order {
            return Err(Error::OutOfWindow {
                exp: n,
                min_exp: self.min_exp,
                order: self.order,
            });
        }
        Ok(&mut self.coeffs[(n - self.min_exp) as usize])
    }

    /// Exponent of the lowest nonzero coefficient, if any.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|p| self.min_exp + p as i64)
    }

    /// Iterate `(exponent, coefficient)` over nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &C)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.min_exp + i as i64, c))
    }

    /// Forget everything at or above `order`.
    pub fn truncate(&self, order: i64) -> Self {
        let order = order.clamp(self.min_exp, self.order);
        TruncatedSeries {
            min_exp: self.min_exp,
            order,
            coeffs: self.coeffs[..(order - self.min_exp) as usize].to_vec(),
        }
    }

    /// Re-express on a lower starting exponent. Fails if `min_exp` would cut
    /// off a nonzero coefficient.
    pub fn with_min_exp(&self, min_exp: i64) -> Result<Self> {
        if min_exp <= self.min_exp {
            let pad = (self.min_exp - min_exp) as usize;
            let mut coeffs = vec![C::zero(); pad];
            coeffs.extend(self.coeffs.iter().cloned());
            return Ok(TruncatedSeries {
                min_exp,
                order: self.order,
                coeffs,
            });
        }
        if let Some(v) = self.valuation() {
            if v < min_exp {
                return Err(Error::OutOfWindow {
                    exp: v,
                    min_exp,
                    order: self.order,
                });
            }
        }
        let min_exp = min_exp.min(self.order);
        Ok(TruncatedSeries {
            min_exp,
            order: self.order,
            coeffs: self.coeffs[(min_exp - self.min_exp) as usize..].to_vec(),
        })
    }

    /// Multiply by `q^k`.
    pub fn shift(&self, k: i64) -> Self {
        TruncatedSeries {
            min_exp: self.min_exp + k,
            order: self.order + k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        self.map(|x| x.times(c))
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries {
            min_exp: self.min_exp,
            order: self.order,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    /// Coefficient-wise sum on `[min(min_exp), min(order))`.
    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.accumulate(other);
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.map(C::negated)
    }

    /// In-place `self += other`; the window widens downward and shrinks to
    /// the smaller order.
    pub fn accumulate(&mut self, other: &Self) {
        let min_exp = self.min_exp.min(other.min_exp);
        let order = self.order.min(other.order).max(min_exp);
        if min_exp < self.min_exp || order < self.order {
            let mut coeffs = vec![C::zero(); (order - min_exp) as usize];
            for e in self.min_exp.max(min_exp)..order.min(self.order) {
                coeffs[(e - min_exp) as usize] = self.coeffs[(e - self.min_exp) as usize].clone();
            }
            *self = TruncatedSeries {
                min_exp,
                order,
                coeffs,
            };
        }
        let lo = other.min_exp.max(self.min_exp);
        for e in lo..self.order.min(other.order) {
            let src = &other.coeffs[(e - other.min_exp) as usize];
            if !src.is_zero() {
                self.coeffs[(e - self.min_exp) as usize].add_in_place(src);
            }
        }
    }

    /// Cauchy product. The result is known on
    /// `[x.min_exp + y.min_exp, min(x.order + y.min_exp, y.order + x.min_exp))`.
    pub fn mul(&self, other: &Self) -> Self {
        let min_exp = self.min_exp + other.min_exp;
        let order = (self.order + other.min_exp).min(other.order + self.min_exp);
        let mut out = Self::zero(min_exp, order);
        let len = out.coeffs.len();
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() || i >= len {
                continue;
            }
            for (j, y) in other.coeffs[..(len - i).min(other.coeffs.len())]
                .iter()
                .enumerate()
            {
                if !y.is_zero() {
                    out.coeffs[i + j].add_in_place(&x.times(y));
                }
            }
        }
        out
    }

    /// Multiply by the binomial `1 - c·q^e` (`e >= 0`); the window is kept.
    pub fn mul_binomial(&self, c: &C, e: i64) -> Self {
        assert!(e >= 0, "mul_binomial needs a non-negative exponent");
        let mut out = self.clone();
        let e = e as usize;
        let sign = c.unit_sign();
        for m in (e..self.coeffs.len()).rev() {
            let prev = &self.coeffs[m - e];
            if prev.is_zero() {
                continue;
            }
            match sign {
                Some(1) => out.coeffs[m].sub_in_place(prev),
                Some(_) => out.coeffs[m].add_in_place(prev),
                None => out.coeffs[m].sub_in_place(&c.times(prev)),
            }
        }
        out
    }

    /// Divide by the binomial `1 - c·q^e` via `y_m = x_m + c·y_{m-e}`.
    pub fn div_binomial(&self, c: &C, e: i64) -> Result<Self> {
        if e <= 0 {
            return Err(Error::NonUnitDivisor { exp: e });
        }
        let mut out = self.clone();
        let e = e as usize;
        let sign = c.unit_sign();
        for m in e..out.coeffs.len() {
            let (head, tail) = out.coeffs.split_at_mut(m);
            let prev = &head[m - e];
            if prev.is_zero() {
                continue;
            }
            match sign {
                Some(1) => tail[0].add_in_place(prev),
                Some(_) => tail[0].sub_in_place(prev),
                None => tail[0].add_in_place(&c.times(prev)),
            }
        }
        Ok(out)
    }

    /// First exponent where the two series differ, comparing on every
    /// exponent below both orders (coefficients under a window are zero).
    pub fn first_mismatch(&self, other: &Self) -> Option<i64> {
        let hi = self.order.min(other.order);
        let lo = self.min_exp.min(other.min_exp);
        (lo..hi).find(|&e| {
            let a = self.coefficient_or_zero(e).expect("below order");
            let b = other.coefficient_or_zero(e).expect("below order");
            a != b
        })
    }

    pub fn agrees_with(&self, other: &Self) -> bool {
        self.first_mismatch(other).is_none()
    }
}

impl TruncatedSeries<BigInt> {
    /// Coefficients on `[0, order)` as a vector, with zeros for exponents
    /// below `min_exp`. Fails if a negative exponent carries a nonzero value.
    pub fn power_series_coeffs(&self) -> Result<Vec<BigInt>> {
        if let Some(v) = self.valuation() {
            if v < 0 {
                return Err(Error::OutOfWindow {
                    exp: v,
                    min_exp: 0,
                    order: self.order,
                });
            }
        }
        (0..self.order.max(0))
            .map(|e| self.coefficient_or_zero(e))
            .collect()
    }
}

impl<C: Coefficient> Add for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn add(self, rhs: Self) -> Self::Output {
        TruncatedSeries::add(self, rhs)
    }
}

impl<C: Coefficient> Sub for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn sub(self, rhs: Self) -> Self::Output {
        TruncatedSeries::sub(self, rhs)
    }
}

impl<C: Coefficient> Mul for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn mul(self, rhs: Self) -> Self::Output {
        TruncatedSeries::mul(self, rhs)
    }
}

impl<C: Coefficient> Neg for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;
    fn neg(self) -> Self::Output {
        TruncatedSeries::neg(self)
    }
}

/// The finite product `∏_{i<count} (1 - coeff·q^{start_exp + i·step})`.
#[derive(Clone, Debug, PartialEq)]
pub struct PochhammerSpec<C = BigInt> {
    pub coeff: C,
    pub start_exp: i64,
    pub step: i64,
    pub count: usize,
}

impl<C: Coefficient> PochhammerSpec<C> {
    /// `(coeff·q^start; q)_count`.
    pub fn new(coeff: C, start_exp: i64, count: usize) -> Self {
        Self::with_step(coeff, start_exp, 1, count)
    }

    /// `(coeff·q^start; q^step)_count`.
    pub fn with_step(coeff: C, start_exp: i64, step: i64, count: usize) -> Self {
        PochhammerSpec {
            coeff,
            start_exp,
            step,
            count,
        }
    }

    pub fn factor_exps(&self) -> impl Iterator<Item = i64> + '_ {
        (0..self.count as i64).map(|i| self.start_exp + i * self.step)
    }

    /// Multiply `x` by the product.
    pub fn apply(&self, x: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        self.factor_exps()
            .fold(x.clone(), |acc, e| acc.mul_binomial(&self.coeff, e))
    }

    /// Divide `x` by the product; every factor needs a positive exponent.
    pub fn divide(&self, x: &TruncatedSeries<C>) -> Result<TruncatedSeries<C>> {
        self.factor_exps()
            .try_fold(x.clone(), |acc, e| acc.div_binomial(&self.coeff, e))
    }
}

/// Expand a q-Pochhammer product below `order`.
pub fn pochhammer<C: Coefficient>(spec: &PochhammerSpec<C>, order: i64) -> TruncatedSeries<C> {
    spec.apply(&TruncatedSeries::one(order))
}
