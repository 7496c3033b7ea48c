use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::series::TruncatedSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
        })
    }
}

/// Outcome of comparing two computations coefficient by coefficient.
///
/// `first_mismatch` is present exactly when the status is `FAIL`. The
/// mismatching coefficients are kept as decimal strings so that values of
/// any size survive serialisation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub check_id: String,
    pub order: i64,
    pub status: Status,
    pub first_mismatch: Option<i64>,
    pub lhs_coeff: Option<String>,
    pub rhs_coeff: Option<String>,
}

impl VerificationReport {
    pub fn pass(check_id: impl Into<String>, order: i64) -> Self {
        VerificationReport {
            check_id: check_id.into(),
            order,
            status: Status::Pass,
            first_mismatch: None,
            lhs_coeff: None,
            rhs_coeff: None,
        }
    }

    pub fn fail(
        check_id: impl Into<String>,
        order: i64,
        at: i64,
        lhs: impl ToString,
        rhs: impl ToString,
    ) -> Self {
        VerificationReport {
            check_id: check_id.into(),
            order,
            status: Status::Fail,
            first_mismatch: Some(at),
            lhs_coeff: Some(lhs.to_string()),
            rhs_coeff: Some(rhs.to_string()),
        }
    }

    /// Compare two series on every exponent below both orders.
    pub fn compare_series(
        check_id: impl Into<String>,
        order: i64,
        lhs: &TruncatedSeries<BigInt>,
        rhs: &TruncatedSeries<BigInt>,
    ) -> Self {
        match lhs.first_mismatch(rhs) {
            None => Self::pass(check_id, order),
            Some(at) => {
                let l = lhs
                    .coefficient_or_zero(at)
                    .unwrap_or_else(|_| BigInt::from(0));
                let r = rhs
                    .coefficient_or_zero(at)
                    .unwrap_or_else(|_| BigInt::from(0));
                Self::fail(check_id, order, at, l, r)
            }
        }
    }

    /// Compare two coefficient sequences indexed from exponent 0.
    pub fn compare_values(
        check_id: impl Into<String>,
        order: i64,
        lhs: &[BigInt],
        rhs: &[BigInt],
    ) -> Self {
        let len = lhs.len().max(rhs.len());
        let zero = BigInt::from(0);
        for n in 0..len {
            let l = lhs.get(n).unwrap_or(&zero);
            let r = rhs.get(n).unwrap_or(&zero);
            if l != r {
                return Self::fail(check_id, order, n as i64, l, r);
            }
        }
        Self::pass(check_id, order)
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}
