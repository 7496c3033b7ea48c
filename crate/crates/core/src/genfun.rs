//! Product-side generating functions and the coefficient tables `B(n)`, `B̄(n)`.
//!
//! For `k >= 0` the bivariate generating function
//!
//! ```text
//! G_k(a, q) = (q; q)_k q^{k²} / (a q^{k+1}; q)_k
//! ```
//!
//! counts the restricted partitions of [`crate::partitions`] with sign, the
//! power of `a` recording how many parts lie in `(k, 2k]`. Summing `G_k` at
//! `a = 1` gives `Σ B(n) qⁿ`; summing `(-1)^k G_k` at `a = -1` gives
//! `Σ B̄(n) qⁿ`. The same two series have the independent product forms
//! [`lhs_28`] and [`lhs_27`] (and [`middle_37`]).

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::{Coefficient, PolyA};
use crate::series::{PochhammerSpec, TruncatedSeries};

type Series = TruncatedSeries<BigInt>;

fn neg_one_pow(n: i64) -> BigInt {
    BigInt::from(if n % 2 == 0 { 1 } else { -1 })
}

/// Sum the per-index terms `0, 1, …` whose leading exponent `n²` is below
/// `order`. Terms are built in parallel and added in index order.
fn sum_square_indexed<F>(order: i64, term: F) -> Series
where
    F: Fn(i64) -> Series + Sync,
{
    let idx: Vec<i64> = (0..).take_while(|n: &i64| n * n < order).collect();
    let parts: Vec<Series> = idx.par_iter().map(|&n| term(n)).collect();
    let mut acc = Series::zero(0, order.max(0));
    for p in &parts {
        acc.accumulate(p);
    }
    acc
}

/// `Σ_n (q²;q²)_n (-1)^n q^{n²} / (-q;q)_{2n}`.
pub fn lhs_27(order: i64) -> Series {
    let one = BigInt::from(1);
    sum_square_indexed(order, |n| {
        let t = Series::one(order - n * n);
        let t = PochhammerSpec::with_step(one.clone(), 2, 2, n as usize).apply(&t);
        PochhammerSpec::new(BigInt::from(-1), 1, 2 * n as usize)
            .divide(&t)
            .expect("positive exponents")
            .scale(&neg_one_pow(n))
            .shift(n * n)
    })
}

/// `Σ_n (q)_n (-1)^n q^{n(n+1)/2 + n(n-1)/2} / (-q^{n+1};q)_n`.
pub fn middle_37(order: i64) -> Series {
    let one = BigInt::from(1);
    sum_square_indexed(order, |n| {
        let shift = n * (n + 1) / 2 + n * (n - 1) / 2;
        let t = Series::one(order - shift);
        let t = PochhammerSpec::new(one.clone(), 1, n as usize).apply(&t);
        PochhammerSpec::new(BigInt::from(-1), n + 1, n as usize)
            .divide(&t)
            .expect("positive exponents")
            .scale(&neg_one_pow(n))
            .shift(shift)
    })
}

/// `Σ_n (q)_n q^{n²} / (q^{n+1};q)_n`.
pub fn lhs_28(order: i64) -> Series {
    let one = BigInt::from(1);
    sum_square_indexed(order, |n| {
        let t = Series::one(order - n * n);
        let t = PochhammerSpec::new(one.clone(), 1, n as usize).apply(&t);
        PochhammerSpec::new(one.clone(), n + 1, n as usize)
            .divide(&t)
            .expect("positive exponents")
            .shift(n * n)
    })
}

/// `(q;q)_k q^{k²} / (a q^{k+1}; q)_k` over any coefficient ring, with the
/// marker `a` supplied as a ring element.
pub fn genfun_term<C: Coefficient>(k: u32, a: &C, order: i64) -> TruncatedSeries<C> {
    let k = k as i64;
    let shift = k * k;
    let t = TruncatedSeries::<C>::one(order - shift);
    let t = PochhammerSpec::new(C::one(), 1, k as usize).apply(&t);
    PochhammerSpec::new(a.clone(), k + 1, k as usize)
        .divide(&t)
        .expect("positive exponents")
        .shift(shift)
}

/// The `a`-graded generating function of profile `k`: the coefficient of
/// `a^m qⁿ` is the signed count of qualifying partitions of `n` with `m`
/// parts in `(k, 2k]`.
pub fn genfun_k(k: u32, order: i64) -> TruncatedSeries<PolyA> {
    genfun_term(k, &PolyA::a(), order)
}

/// Evaluate every coefficient of an `a`-graded series at `a = value`.
pub fn specialize(series: &TruncatedSeries<PolyA>, value: i64) -> Series {
    let v = BigInt::from(value);
    series.map(|p| p.eval(&v))
}

/// `Σ_k G_k(1, q)`, the `B` route through the partition generating functions.
pub fn b_series_via_genfun(order: i64) -> Series {
    sum_square_indexed(order, |k| genfun_term(k as u32, &BigInt::from(1), order))
}

/// `Σ_k (-1)^k G_k(-1, q)`, the `B̄` route through the partition generating
/// functions.
pub fn bbar_series_via_genfun(order: i64) -> Series {
    sum_square_indexed(order, |k| {
        genfun_term(k as u32, &BigInt::from(-1), order).scale(&neg_one_pow(k))
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedMonomial {
    pub exponent: u64,
    pub sign: i8,
    /// The parts whose sum is `exponent`, in increasing order.
    pub composition: Vec<u64>,
}

/// Uncollected expansion of `(x;x)_k x^{k²}`: one monomial per choice of
/// term in each binomial factor, tagged with the partition it stands for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedMonomialList {
    pub monomials: Vec<SignedMonomial>,
}

impl SignedMonomialList {
    /// Collect like exponents into `(exponent, coefficient)` pairs, dropping
    /// zeros.
    pub fn collected(&self) -> Vec<(u64, i64)> {
        let mut out: Vec<(u64, i64)> = Vec::new();
        for m in &self.monomials {
            match out.last_mut() {
                Some((e, c)) if *e == m.exponent => *c += m.sign as i64,
                _ => out.push((m.exponent, m.sign as i64)),
            }
        }
        out.retain(|&(_, c)| c != 0);
        out
    }
}

/// Each factor `1 - x^i` of `(x;x)_k` either keeps the base multiplicity of
/// part `i` (two copies for `i < k`, one for `i = k`) or adds one more copy
/// with a sign flip. `k = 0` gives the single monomial `x^0`.
pub fn f_poly(k: u32) -> SignedMonomialList {
    let k = k as u64;
    let mut monomials = Vec::with_capacity(1 << k.min(20));
    for mask in 0u64..(1 << k) {
        let mut composition = Vec::new();
        for part in 1..=k {
            let base = if part < k { 2 } else { 1 };
            let extra = (mask >> (part - 1)) & 1;
            composition.extend(std::iter::repeat_n(part, (base + extra) as usize));
        }
        let sign = if mask.count_ones() % 2 == 0 { 1 } else { -1 };
        monomials.push(SignedMonomial {
            exponent: composition.iter().sum(),
            sign,
            composition,
        });
    }
    monomials.sort_by(|a, b| {
        a.exponent
            .cmp(&b.exponent)
            .then(b.sign.cmp(&a.sign))
            .then_with(|| a.composition.cmp(&b.composition))
    });
    SignedMonomialList { monomials }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TableName {
    B,
    Bbar,
}

impl TableName {
    pub fn as_str(self) -> &'static str {
        match self {
            TableName::B => "b",
            TableName::Bbar => "bbar",
        }
    }
}

/// Exact coefficients `values[n]` for `n = 0..=max_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoefficientTable {
    pub name: TableName,
    pub values: Vec<BigInt>,
}

impl CoefficientTable {
    /// Read the non-negative part of a series into a table.
    pub fn from_series(name: TableName, series: &Series) -> crate::Result<Self> {
        Ok(CoefficientTable {
            name,
            values: series.power_series_coeffs()?,
        })
    }

    pub fn max_n(&self) -> Option<u64> {
        (self.values.len() as u64).checked_sub(1)
    }
}

/// `B(0..=max_n)` through the partition generating functions.
pub fn b_table(max_n: u64) -> CoefficientTable {
    let s = b_series_via_genfun(max_n as i64 + 1);
    CoefficientTable::from_series(TableName::B, &s).expect("power series")
}

/// `B̄(0..=max_n)` through the partition generating functions.
pub fn bbar_table(max_n: u64) -> CoefficientTable {
    let s = bbar_series_via_genfun(max_n as i64 + 1);
    CoefficientTable::from_series(TableName::Bbar, &s).expect("power series")
}
