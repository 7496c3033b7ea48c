//! Two explicit Bailey pairs and the checks that tie them to the ternary
//! identities.
//!
//! A Bailey pair relative to `a` in base `p` is a pair of sequences with
//!
//! ```text
//! β_n = Σ_{r=0}^{n} α_r / ((a·p; p)_{n+r} (p; p)_{n-r})
//! ```
//!
//! Both pairs here take `a = p`, so the denominators are `(p²; p)_{n+r}` and
//! `(p; p)_{n-r}`. [`PairId::A`] lives in base `p = q²`, [`PairId::B`] in base
//! `p = q`. Inserting a pair into the specialised lemma
//!
//! ```text
//! Σ_n (p;p)_n (-1)^n β_n p^{n(n+1)/2} = (1-p) Σ_n (-1)^n p^{n(n+1)/2} α_n
//! ```
//!
//! reproduces the product side and the lattice side of the two ternary
//! identities computed in [`crate::genfun`] and [`crate::ternary`].

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::report::VerificationReport;
use crate::series::{PochhammerSpec, TruncatedSeries};

type Series = TruncatedSeries<BigInt>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PairId {
    /// `β_n = q^{-n} / (-q; q)_{2n}`, base `q²`.
    A,
    /// `β_n = (q)_n (-1)^n q^{n(n-1)/2} / (q)_{2n}`, base `q`.
    B,
}

impl PairId {
    /// Exponent `b` of the base `p = q^b`.
    pub fn base_power(self) -> i64 {
        match self {
            PairId::A => 2,
            PairId::B => 1,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            PairId::A => "A",
            PairId::B => "B",
        }
    }

    /// Lowest exponent that can occur in `α_n`.
    pub fn alpha_min_exp(self, n: i64) -> i64 {
        match self {
            // (i/2 - n)^2 - n, attained at i = 2n, j = -n
            PairId::A => -n,
            // n(n-1)/2 + min_i (i^2 - n i)
            PairId::B => {
                let i = n / 2;
                n * (n - 1) / 2 + i * i - n * i
            }
        }
    }

    /// Lowest exponent that can occur in `β_n`.
    pub fn beta_min_exp(self, n: i64) -> i64 {
        match self {
            PairId::A => -n,
            PairId::B => n * (n - 1) / 2,
        }
    }
}

fn sign(k: i64) -> BigInt {
    if k.rem_euclid(2) == 0 {
        BigInt::from(1)
    } else {
        BigInt::from(-1)
    }
}

/// `β_n` on the window `[beta_min_exp(n), order)`.
pub fn beta_explicit(pair: PairId, n: u32, order: i64) -> Series {
    let n = n as i64;
    let one = BigInt::from(1);
    match pair {
        PairId::A => {
            // q^{-n} / (-q; q)_{2n}
            let base = Series::one(order + n);
            let denom = PochhammerSpec::new(BigInt::from(-1), 1, 2 * n as usize);
            denom.divide(&base).expect("positive exponents").shift(-n)
        }
        PairId::B => {
            let shift = n * (n - 1) / 2;
            let base = Series::one(order - shift);
            let num = PochhammerSpec::new(one.clone(), 1, n as usize).apply(&base);
            let den = PochhammerSpec::new(one, 1, 2 * n as usize);
            den.divide(&num)
                .expect("positive exponents")
                .scale(&sign(n))
                .shift(shift)
        }
    }
}

/// `α_n` on the window `[alpha_min_exp(n), order)`.
pub fn alpha_explicit(pair: PairId, n: u32, order: i64) -> Series {
    alpha_explicit_with_slack(pair, n, order, 0)
}

/// As [`alpha_explicit`], but the `i`-loop runs `extra_rows` rows past the
/// point where the exponent bound says no further term can land below
/// `order`. Used to re-validate the bound.
pub fn alpha_explicit_with_slack(pair: PairId, n: u32, order: i64, extra_rows: i64) -> Series {
    let n = n as i64;
    let min_exp = pair.alpha_min_exp(n);
    let mut acc = vec![BigInt::from(0); (order - min_exp).max(0) as usize];
    let mut put = |e: i64, c: i64| {
        if e < order {
            assert!(
                e >= min_exp,
                "alpha_{n} term q^{e} lies below the Laurent window {min_exp}"
            );
            acc[(e - min_exp) as usize] += c;
        }
    };
    let mut extra = None;
    let mut i = 0i64;
    loop {
        let past_bound = match pair {
            // 4·(n(n-1) + i^2/4 - n i) bounds 4× every exponent of row i,
            // increasing once i >= 2n.
            PairId::A => i >= 2 * n && 4 * n * (n - 1) + i * i - 4 * n * i >= 4 * order,
            // n(n-1)/2 + i^2 - n i, increasing once 2i >= n.
            PairId::B => 2 * i >= n && n * (n - 1) / 2 + i * i - n * i >= order,
        };
        if past_bound {
            let left = extra.get_or_insert(extra_rows);
            if *left == 0 {
                break;
            }
            *left -= 1;
        }
        match pair {
            PairId::A => {
                let half = i / 2;
                for j in -half..=half {
                    let e = n * (n - 1) + i * (i + 1) / 2 - j * (j - 1) + 2 * n * j;
                    put(e, if j.rem_euclid(2) == 0 { 1 } else { -1 });
                }
            }
            PairId::B => {
                for j in -i..=i {
                    let e = n * (n - 1) / 2 + i * (3 * i + 1) / 2 - j * (j - 1) / 2 + n * j;
                    let s = if (i + j).rem_euclid(2) == 0 { 1 } else { -1 };
                    put(e, s);
                    put(e + 2 * i + 1, -s);
                }
            }
        }
        i += 1;
    }
    let one = BigInt::from(1);
    let b = pair.base_power();
    let acc = if order >= min_exp {
        Series::from_dense(min_exp, acc)
    } else {
        Series::zero(order, order)
    };
    acc.mul_binomial(&one, b * (2 * n + 1))
        .div_binomial(&one, b)
        .expect("positive exponent")
        .scale(&sign(n))
}

/// `Σ_{r<=n} α_r / ((p²;p)_{n+r} (p;p)_{n-r})` with `p = q^b`.
pub fn beta_from_alphas(pair: PairId, n: u32, order: i64) -> Series {
    let b = pair.base_power();
    let one = BigInt::from(1);
    let n = n as i64;
    let mut sum = Series::zero(pair.beta_min_exp(n).min(0), order);
    for r in 0..=n {
        let alpha = alpha_explicit(pair, r as u32, order);
        let d1 = PochhammerSpec::with_step(one.clone(), 2 * b, b, (n + r) as usize);
        let d2 = PochhammerSpec::with_step(one.clone(), b, b, (n - r) as usize);
        let term = d2
            .divide(&d1.divide(&alpha).expect("positive exponents"))
            .expect("positive exponents");
        sum.accumulate(&term);
    }
    sum
}

/// Check the defining relation for every `n <= n_max`. Mismatches at
/// negative exponents count, so any Laurent residue shows up as a failure.
pub fn verify_pair_definition(pair: PairId, n_max: u32, order: i64) -> Vec<VerificationReport> {
    (0..=n_max)
        .into_par_iter()
        .map(|n| {
            let lhs = beta_explicit(pair, n, order);
            let rhs = beta_from_alphas(pair, n, order);
            let id = format!("pair-def-{}[n={n}]", pair.label());
            VerificationReport::compare_series(id, order, &lhs, &rhs)
        })
        .collect()
}

/// The β-side and α-side of the specialised Bailey lemma, truncated at
/// `order`.
pub fn bailey_lemma_sides(pair: PairId, order: i64) -> (Series, Series) {
    let b = pair.base_power();
    let one = BigInt::from(1);

    // β-side terms have valuation n^2 for both pairs.
    let lhs_terms: Vec<i64> = (0..).take_while(|n: &i64| n * n < order).collect();
    let lhs_parts: Vec<Series> = lhs_terms
        .par_iter()
        .map(|&n| {
            let shift = b * n * (n + 1) / 2;
            let beta = beta_explicit(pair, n as u32, order - shift);
            PochhammerSpec::with_step(one.clone(), b, b, n as usize)
                .apply(&beta)
                .scale(&sign(n))
                .shift(shift)
        })
        .collect();

    let rhs_terms: Vec<i64> = (0..)
        .take_while(|&n: &i64| pair.alpha_min_exp(n) + b * n * (n + 1) / 2 < order)
        .collect();
    let rhs_parts: Vec<Series> = rhs_terms
        .par_iter()
        .map(|&n| {
            let shift = b * n * (n + 1) / 2;
            alpha_explicit(pair, n as u32, order - shift)
                .scale(&sign(n))
                .shift(shift)
        })
        .collect();

    let mut lhs = Series::zero(0, order);
    for t in &lhs_parts {
        lhs.accumulate(t);
    }
    let mut rhs = Series::zero(0, order);
    for t in &rhs_parts {
        rhs.accumulate(t);
    }
    (lhs, rhs.mul_binomial(&one, b))
}

/// Report comparing the two sides of the lemma for one pair.
pub fn verify_bailey_lemma(pair: PairId, order: i64) -> VerificationReport {
    let (lhs, rhs) = bailey_lemma_sides(pair, order);
    let id = format!("lemma-2.2-{}", pair.label());
    VerificationReport::compare_series(id, order, &lhs, &rhs)
}
