//! Exact q-series toolkit for a family of Bailey-pair identities whose
//! right-hand sides are theta-like sums over ternary quadratic forms.
//!
//! The crate is organised bottom-up:
//!
//! - [`series`] and [`coeff`]: truncated Laurent series with exact
//!   (arbitrary-precision) coefficients, optionally graded by a marker `a`.
//! - [`bailey`]: two explicit Bailey pairs, the defining relation, and the
//!   specialised Bailey lemma.
//! - [`genfun`]: the product-side generating functions and the coefficient
//!   tables `B(n)` and `B̄(n)`.
//! - [`partitions`]: a brute-force partition enumerator used as ground truth.
//! - [`ternary`]: lattice-sum evaluation of the ternary expansions and
//!   representability by quadratic forms.
//! - [`density`]: nonzero-coefficient and representability density scans.
//! - [`cli`]: the `qternary` command-line front end.
//!
//! The guide in `book/` walks through each of these; its code snippets are
//! compiled and run as doc-tests of this crate.

pub mod bailey;
pub mod cli;
pub mod coeff;
pub mod density;
mod error;
pub mod genfun;
pub mod partitions;
pub mod report;
pub mod series;
pub mod ternary;

pub use coeff::{Coefficient, PolyA};
pub use error::{Error, Result};
pub use report::{Status, VerificationReport};
pub use series::{pochhammer, PochhammerSpec, TruncatedSeries};

pub use num_bigint::BigInt;

// The guide's snippets run as doc-tests, one module per chapter.
#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/series.md")]
    mod series {}
    #[doc = include_str!("../../../book/src/bailey.md")]
    mod bailey {}
    #[doc = include_str!("../../../book/src/partitions.md")]
    mod partitions {}
    #[doc = include_str!("../../../book/src/lattice.md")]
    mod lattice {}
    #[doc = include_str!("../../../book/src/density.md")]
    mod density {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
