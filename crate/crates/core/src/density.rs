//! Empirical density scans.
//!
//! Every scan counts `#{1 <= n <= X : predicate(n)}` at a list of
//! checkpoints `X`; `n = 0` is never counted. Ratios are kept as exact
//! `count / X` pairs and only rounded when rendered.

use num_traits::Zero;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::genfun::{CoefficientTable, TableName};
use crate::ternary::{self, TernaryForm};

/// Default checkpoints: the decades `10³ … 10⁶`.
pub const DEFAULT_CHECKPOINTS: [u64; 4] = [1_000, 10_000, 100_000, 1_000_000];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityRow {
    pub x: u64,
    pub count: u64,
}

impl DensityRow {
    /// `count / x` to six decimal places, rounded half up; `0.000000` at `x = 0`.
    pub fn ratio_string(&self) -> String {
        format_ratio(self.count, self.x)
    }

    pub fn ratio_f64(&self) -> f64 {
        if self.x == 0 {
            0.0
        } else {
            self.count as f64 / self.x as f64
        }
    }
}

pub fn format_ratio(count: u64, x: u64) -> String {
    if x == 0 {
        return "0.000000".to_string();
    }
    let scaled = (2 * count as u128 * 1_000_000 + x as u128) / (2 * x as u128);
    format!("{}.{:06}", scaled / 1_000_000, scaled % 1_000_000)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DensityReport {
    pub subject: String,
    pub rows: Vec<DensityRow>,
}

impl DensityReport {
    pub fn counts(&self) -> Vec<u64> {
        self.rows.iter().map(|r| r.count).collect()
    }

    fn from_flags(
        subject: impl Into<String>,
        flags: impl Fn(u64) -> bool,
        checkpoints: &[u64],
    ) -> Self {
        let checkpoints = normalise(checkpoints);
        let mut rows = Vec::with_capacity(checkpoints.len());
        let mut count = 0;
        let mut n = 1;
        for &x in &checkpoints {
            while n <= x {
                if flags(n) {
                    count += 1;
                }
                n += 1;
            }
            rows.push(DensityRow { x, count });
        }
        DensityReport {
            subject: subject.into(),
            rows,
        }
    }
}

fn normalise(checkpoints: &[u64]) -> Vec<u64> {
    let mut v = checkpoints.to_vec();
    v.sort_unstable();
    v.dedup();
    v
}

fn check_range(table: &CoefficientTable, checkpoints: &[u64]) -> Result<()> {
    let max_n = table.max_n().unwrap_or(0);
    match checkpoints
        .iter()
        .find(|&&x| x > max_n || table.values.is_empty())
    {
        Some(&x) => Err(Error::CheckpointOutOfRange {
            checkpoint: x,
            max_n,
        }),
        None => Ok(()),
    }
}

/// Nonzero coefficients of a table up to each checkpoint.
pub fn nonzero_density(table: &CoefficientTable, checkpoints: &[u64]) -> Result<DensityReport> {
    check_range(table, checkpoints)?;
    Ok(DensityReport::from_flags(
        table.name.as_str(),
        |n| !table.values[n as usize].is_zero(),
        checkpoints,
    ))
}

/// Sums of three squares, via Legendre's criterion.
pub fn three_squares_density(checkpoints: &[u64]) -> DensityReport {
    DensityReport::from_flags("three-squares", ternary::is_sum_three_squares, checkpoints)
}

/// Values of `x² + xy + y²`.
pub fn loeschian_density(checkpoints: &[u64]) -> DensityReport {
    let max = checkpoints.iter().copied().max().unwrap_or(0);
    let flags = ternary::loeschian_flags(max);
    DensityReport::from_flags("loeschian", |n| flags[n as usize], checkpoints)
}

/// Integers represented by a positive ternary form.
pub fn form_density(form: &TernaryForm, checkpoints: &[u64]) -> Result<DensityReport> {
    let max = checkpoints.iter().copied().max().unwrap_or(0);
    let flags = form.representable_flags(max)?;
    Ok(DensityReport::from_flags(
        format!(
            "form:{}",
            form.to_string().trim_matches(|c| c == '(' || c == ')')
        ),
        |n| flags[n as usize],
        checkpoints,
    ))
}

/// `B(0..=max_n)` or `B̄(0..=max_n)` through the lattice sums, the fast
/// route for large tables.
pub fn lattice_table(name: TableName, max_n: u64) -> CoefficientTable {
    let order = max_n as i64 + 1;
    let series = match name {
        TableName::B => ternary::rhs_28(order),
        TableName::Bbar => ternary::rhs_27(order),
    };
    CoefficientTable::from_series(name, &series).expect("lattice sums have no negative exponents")
}

/// One point of the tail-supremum estimate of the upper density.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UpperDensityPoint {
    /// Start of the tail window.
    pub x: u64,
    /// Where in `[x, max_n]` the largest ratio `count(X')/X'` is attained.
    pub argmax: u64,
    pub count: u64,
}

impl UpperDensityPoint {
    pub fn ratio_string(&self) -> String {
        format_ratio(self.count, self.argmax)
    }
}

/// For each decade `x = 1, 10, 100, …` up to the table's end, the largest
/// nonzero ratio `count(X')/X'` over `x <= X' <= max_n`. Read as a finite
/// stand-in for `lim sup_X count(X)/X`, the sequence is non-increasing.
pub fn running_upper_density(table: &CoefficientTable) -> Vec<UpperDensityPoint> {
    let max_n = match table.max_n() {
        Some(m) if m >= 1 => m,
        _ => return Vec::new(),
    };
    let mut prefix = vec![0u64; max_n as usize + 1];
    for n in 1..=max_n as usize {
        prefix[n] = prefix[n - 1] + u64::from(!table.values[n].is_zero());
    }
    // best[x] = argmax over X' in [x, max_n] of prefix[X'] / X'
    let mut best = vec![max_n; max_n as usize + 1];
    for x in (1..max_n).rev() {
        let cand = best[x as usize + 1];
        // prefix[x]/x >= prefix[cand]/cand, ties resolved toward smaller X
        best[x as usize] = if prefix[x as usize] as u128 * cand as u128
            >= prefix[cand as usize] as u128 * x as u128
        {
            x
        } else {
            cand
        };
    }
    let mut out = Vec::new();
    let mut x = 1u64;
    while x <= max_n {
        let argmax = best[x as usize];
        out.push(UpperDensityPoint {
            x,
            argmax,
            count: prefix[argmax as usize],
        });
        x = x.saturating_mul(10);
    }
    out
}

/// Every `n` with a nonzero coefficient is reached by some lattice term of
/// the matching ternary expansion. Returns the first `n` that is not.
pub fn support_violation(table: &CoefficientTable) -> Option<u64> {
    let form = match table.name {
        TableName::B => ternary::FormId::Rhs28,
        TableName::Bbar => ternary::FormId::Rhs27,
    };
    let hit = ternary::lattice_support(form, table.values.len() as i64);
    table
        .values
        .iter()
        .enumerate()
        .find(|(n, v)| !v.is_zero() && !hit[*n])
        .map(|(n, _)| n as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::genfun::{b_table, bbar_table};
    use num_bigint::BigInt;

    fn table(name: TableName, v: &[i64]) -> CoefficientTable {
        CoefficientTable {
            name,
            values: v.iter().map(|&x| BigInt::from(x)).collect(),
        }
    }

    #[test]
    fn ratio_rendering() {
        assert_eq!(format_ratio(4, 6), "0.666667");
        assert_eq!(format_ratio(1, 8), "0.125000");
        assert_eq!(format_ratio(1, 3), "0.333333");
        assert_eq!(format_ratio(5, 5), "1.000000");
        assert_eq!(format_ratio(0, 0), "0.000000");
        // 1/2_000_000 = 0.0000005 rounds up
        assert_eq!(format_ratio(1, 2_000_000), "0.000001");
    }

    #[test]
    fn nonzero_density_examples() {
        let r = nonzero_density(&b_table(6), &[6]).unwrap();
        assert_eq!(r.rows, vec![DensityRow { x: 6, count: 4 }]);
        assert_eq!(r.rows[0].ratio_string(), "0.666667");
        let r = nonzero_density(&bbar_table(6), &[6]).unwrap();
        assert_eq!(r.rows[0].count, 4);
        let z = table(TableName::B, &[0; 11]);
        let r = nonzero_density(&z, &[5, 10]).unwrap();
        assert!(r
            .rows
            .iter()
            .all(|row| row.count == 0 && row.ratio_string() == "0.000000"));
    }

    #[test]
    fn checkpoint_beyond_table() {
        let err = nonzero_density(&b_table(6), &[7]).unwrap_err();
        assert_eq!(
            err,
            Error::CheckpointOutOfRange {
                checkpoint: 7,
                max_n: 6
            }
        );
    }

    #[test]
    fn three_squares_examples() {
        let r = three_squares_density(&[1, 1000]);
        assert_eq!(r.counts(), vec![1, 835]);
    }

    #[test]
    fn loeschian_examples() {
        assert_eq!(loeschian_density(&[0, 20]).counts(), vec![0, 9]);
    }

    #[test]
    fn form_density_sum_of_squares() {
        let r = form_density(&TernaryForm::SUM_OF_SQUARES, &[1000]).unwrap();
        assert_eq!(r.counts(), vec![835]);
        assert_eq!(r.subject, "form:1,1,1,0,0,0");
    }

    #[test]
    fn upper_density_edge_tables() {
        let ones = table(TableName::B, &[1; 1001]);
        let pts = running_upper_density(&ones);
        assert_eq!(
            pts.iter().map(|p| p.x).collect::<Vec<_>>(),
            vec![1, 10, 100, 1000]
        );
        assert!(pts.iter().all(|p| p.ratio_string() == "1.000000"));
        let zeros = table(TableName::B, &[0; 101]);
        assert!(running_upper_density(&zeros).iter().all(|p| p.count == 0));
    }

    #[test]
    fn upper_density_is_tail_supremum() {
        let t = b_table(300);
        let pts = running_upper_density(&t);
        let prefix: Vec<u64> = (0..=300)
            .map(|x| (1..=x).filter(|&n| !t.values[n].is_zero()).count() as u64)
            .collect();
        for p in &pts {
            let brute = (p.x..=300)
                .map(|x| prefix[x as usize] as f64 / x as f64)
                .fold(0.0, f64::max);
            assert!((p.count as f64 / p.argmax as f64 - brute).abs() < 1e-12);
        }
        assert!(pts.windows(2).all(|w| {
            w[1].count as u128 * w[0].argmax as u128 <= w[0].count as u128 * w[1].argmax as u128
        }));
    }

    #[test]
    fn lattice_tables_match_genfun_tables() {
        assert_eq!(lattice_table(TableName::B, 200), b_table(200));
        assert_eq!(lattice_table(TableName::Bbar, 200), bbar_table(200));
    }

    #[test]
    fn support_condition_holds() {
        assert_eq!(support_violation(&lattice_table(TableName::B, 2000)), None);
        assert_eq!(
            support_violation(&lattice_table(TableName::Bbar, 2000)),
            None
        );
    }
}
