//! Lattice sums for the ternary sides of the two identities, their diagonal
//! split, and representability by positive ternary and binary forms.
//!
//! The two lattice series are
//!
//! ```text
//! R28 = Σ_{n,i>=0, |j|<=i}  (-1)^{i+j} (1-q^{2n+1})(1-q^{2i+1}) q^{n² + i(3i+1)/2 - j(j-1)/2 + nj}
//! R27 = Σ_{n,i>=0, 2|j|<=i} (-1)^j     (1-q^{4n+2})            q^{2n² + i(i+1)/2 - j(j-1) + 2nj}
//! ```
//!
//! Enumeration is pruned with exact lower bounds on the exponent of a row;
//! the `*_with_slack` variants walk a box enlarged in every index so the
//! bounds can be re-validated.

use num_bigint::BigInt;
use num_integer::{Integer, Roots};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::series::TruncatedSeries;

type Series = TruncatedSeries<BigInt>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FormId {
    Rhs27,
    Rhs28,
}

impl std::str::FromStr for FormId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "2.7" => Ok(FormId::Rhs27),
            "2.8" => Ok(FormId::Rhs28),
            other => Err(Error::Usage(format!(
                "unknown form id `{other}` (expected 2.7 or 2.8)"
            ))),
        }
    }
}

/// A summation index `(n, i, j)` of one of the two lattice series.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LatticeTriple {
    pub n: i64,
    pub i: i64,
    pub j: i64,
    pub form: FormId,
}

impl LatticeTriple {
    pub fn is_admissible(&self) -> bool {
        let base = self.n >= 0 && self.i >= 0;
        match self.form {
            FormId::Rhs27 => base && 2 * self.j.abs() <= self.i,
            FormId::Rhs28 => base && self.j.abs() <= self.i,
        }
    }

    /// Exponent before the binomial prefactors are expanded.
    pub fn exponent(&self) -> i64 {
        let (n, i, j) = (self.n, self.i, self.j);
        match self.form {
            FormId::Rhs27 => 2 * n * n + i * (i + 1) / 2 - j * (j - 1) + 2 * n * j,
            FormId::Rhs28 => n * n + i * (3 * i + 1) / 2 - j * (j - 1) / 2 + n * j,
        }
    }

    pub fn sign(&self) -> i64 {
        let s = match self.form {
            FormId::Rhs27 => self.j,
            FormId::Rhs28 => self.i + self.j,
        };
        if s.rem_euclid(2) == 0 {
            1
        } else {
            -1
        }
    }

    /// `(offset, sign)` terms of the binomial prefactor of this triple.
    pub fn offsets(&self) -> Vec<(i64, i64)> {
        match self.form {
            FormId::Rhs27 => vec![(0, 1), (4 * self.n + 2, -1)],
            FormId::Rhs28 => {
                let (a, b) = (2 * self.n + 1, 2 * self.i + 1);
                vec![(0, 1), (a, -1), (b, -1), (a + b, 1)]
            }
        }
    }
}

/// Per-worker accumulator of signed lattice contributions below `order`.
struct Counts {
    order: i64,
    vals: Vec<i64>,
}

impl Counts {
    fn new(order: i64) -> Self {
        Counts {
            order,
            vals: vec![0; order.max(0) as usize],
        }
    }

    fn put(&mut self, e: i64, s: i64) {
        if e < self.order {
            assert!(e >= 0, "lattice term q^{e} has a negative exponent");
            self.vals[e as usize] += s;
        }
    }

    fn put_triple(&mut self, t: &LatticeTriple) {
        let e = t.exponent();
        let s = t.sign();
        for (off, os) in t.offsets() {
            self.put(e + off, s * os);
        }
    }

    fn merge(mut self, other: Counts) -> Counts {
        for (a, b) in self.vals.iter_mut().zip(other.vals) {
            *a += b;
        }
        self
    }

    fn into_series(self) -> Series {
        Series::from_dense(0, self.vals.into_iter().map(BigInt::from).collect())
    }
}

fn par_rows<F>(rows: Vec<i64>, order: i64, row: F) -> Series
where
    F: Fn(i64, &mut Counts) + Sync,
{
    rows.into_par_iter()
        .fold(
            || Counts::new(order),
            |mut acc, n| {
                row(n, &mut acc);
                acc
            },
        )
        .reduce(|| Counts::new(order), Counts::merge)
        .into_series()
}

// For a concave exponent in j on [lo, hi], visit exactly the j whose exponent
// is below `order`: a prefix and a suffix of the range.
fn scan_concave(
    lo: i64,
    hi: i64,
    order: i64,
    exp: impl Fn(i64) -> i64,
    mut visit: impl FnMut(i64),
) {
    let mut j = lo;
    while j <= hi && exp(j) < order {
        visit(j);
        j += 1;
    }
    let left_end = j;
    let mut j = hi;
    while j > left_end && exp(j) < order {
        visit(j);
        j -= 1;
    }
}

fn rhs28_rows(order: i64) -> Vec<i64> {
    // min over i of n^2 + i^2 - n i is attained at i = n/2
    (0..)
        .take_while(|&n: &i64| {
            let i = n / 2;
            n * n + i * i - n * i < order
        })
        .collect()
}

fn rhs28_row_len(order: i64, n: i64) -> i64 {
    (0..)
        .take_while(|&i: &i64| 2 * i < n || n * n + i * i - n * i < order)
        .count() as i64
}

fn rhs28_pruned(order: i64, keep: impl Fn(&LatticeTriple) -> bool + Sync) -> Series {
    par_rows(rhs28_rows(order), order, |n, acc| {
        for i in 0..rhs28_row_len(order, n) {
            let t = |j| LatticeTriple {
                n,
                i,
                j,
                form: FormId::Rhs28,
            };
            scan_concave(
                -i,
                i,
                order,
                |j| t(j).exponent(),
                |j| {
                    let t = t(j);
                    if keep(&t) {
                        acc.put_triple(&t);
                    }
                },
            );
        }
    })
}

fn rhs27_rows(order: i64) -> Vec<i64> {
    (0..).take_while(|&n: &i64| n * n < order).collect()
}

fn rhs27_row_len(order: i64, n: i64) -> i64 {
    // 2n^2 + i^2/4 - n i bounds every exponent of row i; increasing past i = 2n
    (0..)
        .take_while(|&i: &i64| i < 2 * n || 8 * n * n + i * i - 4 * n * i < 4 * order)
        .count() as i64
}

fn rhs27_pruned(order: i64, keep: impl Fn(&LatticeTriple) -> bool + Sync) -> Series {
    par_rows(rhs27_rows(order), order, |n, acc| {
        for i in 0..rhs27_row_len(order, n) {
            let t = |j| LatticeTriple {
                n,
                i,
                j,
                form: FormId::Rhs27,
            };
            scan_concave(
                -(i / 2),
                i / 2,
                order,
                |j| t(j).exponent(),
                |j| {
                    let t = t(j);
                    if keep(&t) {
                        acc.put_triple(&t);
                    }
                },
            );
        }
    })
}

/// The ternary side of the `B(n)` identity, below `order`.
pub fn rhs_28(order: i64) -> Series {
    rhs28_pruned(order, |_| true)
}

/// The ternary side of the `B̄(n)` identity, below `order`.
pub fn rhs_27(order: i64) -> Series {
    rhs27_pruned(order, |_| true)
}

/// Walk the box `n <= N + slack`, `i <= I + slack` (with `N`, `I` the
/// largest indices the pruned walk visits) and every admissible `j`,
/// dropping only terms at or above `order`.
pub fn lattice_with_slack(form: FormId, order: i64, slack: i64) -> Series {
    let (rows, row_len): (Vec<i64>, fn(i64, i64) -> i64) = match form {
        FormId::Rhs27 => (rhs27_rows(order), rhs27_row_len),
        FormId::Rhs28 => (rhs28_rows(order), rhs28_row_len),
    };
    let n_max = rows.last().copied().unwrap_or(-1) + slack;
    let i_max = rows.iter().map(|&n| row_len(order, n)).max().unwrap_or(0) - 1 + slack;
    par_rows((0..=n_max).collect(), order, |n, acc| {
        for i in 0..=i_max {
            let half = match form {
                FormId::Rhs27 => i / 2,
                FormId::Rhs28 => i,
            };
            for j in -half..=half {
                acc.put_triple(&LatticeTriple { n, i, j, form });
            }
        }
    })
}

/// The rewritten form of the `B̄(n)` lattice series,
/// `Σ_n q^{2n²}(1-q^{4n+2}) Σ_{i>=0, j∈ℤ} (-1)^j q^{i(i+1)/2 + j(j+1) + (2i+1)|j| + 2jn}`,
/// enumerated directly over its own index set.
pub fn rewrite_41(order: i64) -> Series {
    rewrite_41_with_slack(order, 0)
}

pub fn rewrite_41_with_slack(order: i64, slack: i64) -> Series {
    // exponent >= n^2 + (n+j)^2, so |n + j| <= sqrt(order)
    let reach = order.max(0).sqrt() + 1 + slack;
    let n_max = (0..).take_while(|&n: &i64| n * n < order).count() as i64 - 1;
    let rows: Vec<i64> = (0..=n_max + slack).collect();
    par_rows(rows, order, |n, acc| {
        for j in (-n - reach)..=(-n + reach) {
            let sign = if j.rem_euclid(2) == 0 { 1 } else { -1 };
            let mut extra = slack;
            let mut i = 0;
            loop {
                let e =
                    2 * n * n + i * (i + 1) / 2 + j * (j + 1) + (2 * i + 1) * j.abs() + 2 * j * n;
                if e >= order {
                    // e is increasing in i
                    if extra == 0 {
                        break;
                    }
                    extra -= 1;
                }
                acc.put(e, sign);
                acc.put(e + 4 * n + 2, -sign);
                i += 1;
            }
        }
    })
}

/// The diagonal (`S₁`) and off-diagonal (`S₂`) parts of a lattice series.
/// Coefficients are signed lattice-point counts, prefactor offsets included.
#[derive(Clone, Debug, PartialEq)]
pub struct ComponentExpansion {
    pub form: FormId,
    pub diagonal: Series,
    pub off_diagonal: Series,
}

impl ComponentExpansion {
    pub fn total(&self) -> Series {
        self.diagonal.add(&self.off_diagonal)
    }
}

/// Split on `j = i` (for the `B` series) or `i = 2j` (for the `B̄` series).
///
/// The diagonal is evaluated from its closed-form exponent, which is a
/// binary form in `(n, i)` resp. `(n, j)`; the off-diagonal is the lattice
/// walk with the diagonal removed.
pub fn split_components(form: FormId, order: i64) -> ComponentExpansion {
    match form {
        FormId::Rhs28 => {
            // j = i: n^2 + n i + i^2 + i, sign +1
            let diagonal = par_rows(rhs28_rows(order), order, |n, acc| {
                let mut i = 0;
                while n * n + n * i + i * i + i < order {
                    let e = n * n + n * i + i * i + i;
                    acc.put(e, 1);
                    acc.put(e + 2 * n + 1, -1);
                    acc.put(e + 2 * i + 1, -1);
                    acc.put(e + 2 * n + 2 * i + 2, 1);
                    i += 1;
                }
            });
            let off_diagonal = rhs28_pruned(order, |t| t.j != t.i);
            ComponentExpansion {
                form,
                diagonal,
                off_diagonal,
            }
        }
        FormId::Rhs27 => {
            // i = 2j, j >= 0: 2n^2 + j^2 + 2j + 2nj, sign (-1)^j
            let diagonal = par_rows(rhs27_rows(order), order, |n, acc| {
                let mut j = 0;
                while 2 * n * n + j * j + 2 * j + 2 * n * j < order {
                    let e = 2 * n * n + j * j + 2 * j + 2 * n * j;
                    let s = if j % 2 == 0 { 1 } else { -1 };
                    acc.put(e, s);
                    acc.put(e + 4 * n + 2, -s);
                    j += 1;
                }
            });
            let off_diagonal = rhs27_pruned(order, |t| t.i != 2 * t.j);
            ComponentExpansion {
                form,
                diagonal,
                off_diagonal,
            }
        }
    }
}

/// Exponents below `order` hit by at least one lattice term of `form`
/// (before cancellation).
pub fn lattice_support(form: FormId, order: i64) -> Vec<bool> {
    let mut hit = vec![false; order.max(0) as usize];
    let rows = match form {
        FormId::Rhs27 => rhs27_rows(order),
        FormId::Rhs28 => rhs28_rows(order),
    };
    for n in rows {
        let len = match form {
            FormId::Rhs27 => rhs27_row_len(order, n),
            FormId::Rhs28 => rhs28_row_len(order, n),
        };
        for i in 0..len {
            let half = if form == FormId::Rhs27 { i / 2 } else { i };
            scan_concave(
                -half,
                half,
                order,
                |j| LatticeTriple { n, i, j, form }.exponent(),
                |j| {
                    let t = LatticeTriple { n, i, j, form };
                    for (off, _) in t.offsets() {
                        let e = t.exponent() + off;
                        if e < order {
                            hit[e as usize] = true;
                        }
                    }
                },
            );
        }
    }
    hit
}

/// `f(x,y,z) = a x² + b y² + c z² + r yz + s zx + t xy`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct TernaryForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub r: i64,
    pub s: i64,
    pub t: i64,
}

impl std::fmt::Display for TernaryForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "({},{},{},{},{},{})",
            self.a, self.b, self.c, self.r, self.s, self.t
        )
    }
}

impl std::str::FromStr for TernaryForm {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let v: Vec<i64> = s
            .split(',')
            .map(|x| x.trim().parse::<i64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|e| Error::Usage(format!("bad form `{s}`: {e}")))?;
        match v.as_slice() {
            &[a, b, c, r, s, t] => Ok(TernaryForm::new(a, b, c, r, s, t)),
            _ => Err(Error::Usage(format!(
                "form `{s}` needs six coefficients a,b,c,r,s,t"
            ))),
        }
    }
}

impl TernaryForm {
    pub const SUM_OF_SQUARES: TernaryForm = TernaryForm {
        a: 1,
        b: 1,
        c: 1,
        r: 0,
        s: 0,
        t: 0,
    };

    pub fn new(a: i64, b: i64, c: i64, r: i64, s: i64, t: i64) -> Self {
        TernaryForm { a, b, c, r, s, t }
    }

    pub fn eval(&self, x: i64, y: i64, z: i64) -> i64 {
        self.a * x * x
            + self.b * y * y
            + self.c * z * z
            + self.r * y * z
            + self.s * z * x
            + self.t * x * y
    }

    pub fn is_primitive(&self) -> bool {
        [self.a, self.b, self.c, self.r, self.s, self.t]
            .iter()
            .fold(0i64, |g, &x| g.gcd(&x))
            == 1
    }

    // Gram matrix of 2f.
    fn gram2(&self) -> [[i128; 3]; 3] {
        let (a, b, c, r, s, t) = (
            self.a as i128,
            self.b as i128,
            self.c as i128,
            self.r as i128,
            self.s as i128,
            self.t as i128,
        );
        [[2 * a, t, s], [t, 2 * b, r], [s, r, 2 * c]]
    }

    fn det2(&self) -> i128 {
        let m = self.gram2();
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    }

    /// Sylvester's criterion on the Gram matrix.
    pub fn is_positive_definite(&self) -> bool {
        let m = self.gram2();
        m[0][0] > 0 && m[0][0] * m[1][1] - m[0][1] * m[1][0] > 0 && self.det2() > 0
    }

    fn require_pd(&self) -> Result<()> {
        if self.is_positive_definite() {
            Ok(())
        } else {
            Err(Error::NotPositiveDefinite(self.to_string()))
        }
    }

    /// Largest `|x|` (resp. `|y|`) with `f <= bound` for some completion:
    /// `x² <= 2·bound·C₁₁/det` with `C₁₁` the cofactor of the Gram matrix.
    fn box_radius(&self, bound: i64, axis: usize) -> i64 {
        let m = self.gram2();
        let (p, q) = match axis {
            0 => (1, 2),
            _ => (0, 2),
        };
        let cof = m[p][p] * m[q][q] - m[p][q] * m[q][p];
        let det = self.det2();
        let rhs = 2 * bound as i128 * cof;
        (rhs / det).sqrt() as i64
    }

    /// Visit every integer point with `f <= bound`.
    fn for_each_point_upto(&self, bound: i64, mut visit: impl FnMut(i64)) {
        let rx = self.box_radius(bound, 0);
        let ry = self.box_radius(bound, 1);
        let c = self.c;
        for x in -rx..=rx {
            for y in -ry..=ry {
                // f as a quadratic in z: c z^2 + lin z + cst, minimised near -lin/(2c)
                let lin = self.r * y + self.s * x;
                let start = Integer::div_floor(&(-lin), &(2 * c));
                let mut z = start;
                loop {
                    let v = self.eval(x, y, z);
                    if v > bound {
                        break;
                    }
                    visit(v);
                    z -= 1;
                }
                let mut z = start + 1;
                loop {
                    let v = self.eval(x, y, z);
                    if v > bound {
                        break;
                    }
                    visit(v);
                    z += 1;
                }
            }
        }
    }

    /// Number of integer triples with `f(x,y,z) = n`.
    pub fn represent_count(&self, n: u64) -> Result<u64> {
        self.require_pd()?;
        let n = n as i64;
        let mut count = 0;
        self.for_each_point_upto(n, |v| {
            if v == n {
                count += 1;
            }
        });
        Ok(count)
    }

    /// `flags[n]` is true iff `n <= bound` is represented.
    pub fn representable_flags(&self, bound: u64) -> Result<Vec<bool>> {
        self.require_pd()?;
        let mut flags = vec![false; bound as usize + 1];
        self.for_each_point_upto(bound as i64, |v| flags[v as usize] = true);
        Ok(flags)
    }

    /// Number of represented integers in `0..=bound` (zero included).
    pub fn representable_upto(&self, bound: u64) -> Result<u64> {
        Ok(self
            .representable_flags(bound)?
            .into_iter()
            .filter(|&f| f)
            .count() as u64)
    }
}

/// Legendre's criterion: `n` is a sum of three squares unless it has the
/// form `4^a (8b + 7)`.
pub fn is_sum_three_squares(n: u64) -> bool {
    if n == 0 {
        return true;
    }
    let mut m = n;
    while m.is_multiple_of(4) {
        m /= 4;
    }
    m % 8 != 7
}

/// `flags[n]` is true iff `n <= bound` equals `x² + xy + y²` for integers
/// `x, y`. Non-negative `x, y` suffice: `x² - xy + y²` with `x >= y >= 0`
/// equals `u² + uv + v²` at `u = x - y`, `v = y`.
pub fn loeschian_flags(bound: u64) -> Vec<bool> {
    let mut flags = vec![false; bound as usize + 1];
    let mut x = 0u64;
    while x * x <= bound {
        let mut y = x;
        while x * x + x * y + y * y <= bound {
            flags[(x * x + x * y + y * y) as usize] = true;
            y += 1;
        }
        x += 1;
    }
    flags
}

/// Count of `1 <= n <= bound` of the form `x² + xy + y²`.
pub fn loeschian_upto(bound: u64) -> u64 {
    loeschian_flags(bound)
        .iter()
        .skip(1)
        .filter(|&&f| f)
        .count() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(s: &Series) -> Vec<i64> {
        s.coeffs()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    #[test]
    fn lattice_sides_small_order() {
        assert_eq!(ints(&rhs_28(1)), vec![1]);
        assert_eq!(ints(&rhs_28(7)), vec![1, 1, -1, 1, 0, 0, -2]);
        assert_eq!(ints(&rhs_27(1)), vec![1]);
        assert_eq!(ints(&rhs_27(7)), vec![1, -1, 1, 1, 0, -2, 0]);
        assert_eq!(ints(&rewrite_41(7)), vec![1, -1, 1, 1, 0, -2, 0]);
        assert_eq!(ints(&rewrite_41(1)), vec![1]);
    }

    #[test]
    fn rewrite_agrees_with_lattice_side() {
        assert!(rewrite_41(200).agrees_with(&rhs_27(200)));
    }

    #[test]
    fn pruning_matches_wider_boxes() {
        for order in [1, 2, 17, 150] {
            for form in [FormId::Rhs27, FormId::Rhs28] {
                let pruned = match form {
                    FormId::Rhs27 => rhs_27(order),
                    FormId::Rhs28 => rhs_28(order),
                };
                assert!(
                    pruned.agrees_with(&lattice_with_slack(form, order, 10)),
                    "{form:?} {order}"
                );
            }
            assert!(rewrite_41(order).agrees_with(&rewrite_41_with_slack(order, 10)));
        }
    }

    #[test]
    fn split_sums_to_whole() {
        let s = split_components(FormId::Rhs28, 300);
        assert!(s.total().agrees_with(&rhs_28(300)));
        assert_eq!(
            i64::try_from(s.diagonal.coefficient(0).unwrap()).unwrap(),
            1
        );
        let s = split_components(FormId::Rhs27, 300);
        assert!(s.total().agrees_with(&rhs_27(300)));
    }

    #[test]
    fn diagonal_walk_matches_filtered_walk() {
        let d = split_components(FormId::Rhs28, 200).diagonal;
        assert!(d.agrees_with(&rhs28_pruned(200, |t| t.j == t.i)));
        let d = split_components(FormId::Rhs27, 200).diagonal;
        assert!(d.agrees_with(&rhs27_pruned(200, |t| t.i == 2 * t.j)));
    }

    #[test]
    fn form_ids_parse() {
        assert_eq!("2.7".parse::<FormId>().unwrap(), FormId::Rhs27);
        assert!(matches!("3.1".parse::<FormId>(), Err(Error::Usage(_))));
    }

    #[test]
    fn triples() {
        let t = LatticeTriple {
            n: 0,
            i: 1,
            j: -1,
            form: FormId::Rhs28,
        };
        assert!(t.is_admissible());
        assert_eq!(t.exponent(), 1);
        assert!(!LatticeTriple {
            n: 0,
            i: 1,
            j: 1,
            form: FormId::Rhs27
        }
        .is_admissible());
    }

    // exhaustive search in a generous cube, independent of the box radius
    fn brute_count(f: &TernaryForm, n: i64, r: i64) -> u64 {
        let mut c = 0;
        for x in -r..=r {
            for y in -r..=r {
                for z in -r..=r {
                    if f.eval(x, y, z) == n {
                        c += 1;
                    }
                }
            }
        }
        c
    }

    #[test]
    fn representation_counts() {
        let f = TernaryForm::SUM_OF_SQUARES;
        assert_eq!(f.represent_count(7).unwrap(), 0);
        assert_eq!(f.represent_count(0).unwrap(), 1);
        assert_eq!(f.represent_count(1).unwrap(), 6);
        assert_eq!(f.representable_upto(10).unwrap(), 10);
        let g = TernaryForm::new(2, 3, 5, 1, -1, 1);
        assert!(g.is_positive_definite());
        for n in 0..60 {
            assert_eq!(
                g.represent_count(n).unwrap(),
                brute_count(&g, n as i64, 12),
                "n={n}"
            );
            assert_eq!(
                f.represent_count(n).unwrap(),
                brute_count(&f, n as i64, 8),
                "n={n}"
            );
        }
    }

    #[test]
    fn form_predicates() {
        assert!(TernaryForm::SUM_OF_SQUARES.is_primitive());
        assert!(!TernaryForm::new(2, 2, 4, 0, 2, 0).is_primitive());
        let bad = TernaryForm::new(1, 1, -1, 0, 0, 0);
        assert!(!bad.is_positive_definite());
        assert!(matches!(
            bad.represent_count(3),
            Err(Error::NotPositiveDefinite(_))
        ));
        assert_eq!(
            "1,1,1,0,0,0".parse::<TernaryForm>().unwrap(),
            TernaryForm::SUM_OF_SQUARES
        );
        assert!("1,1,1".parse::<TernaryForm>().is_err());
    }

    #[test]
    fn legendre_examples() {
        assert!(!is_sum_three_squares(7));
        assert!(is_sum_three_squares(6));
        assert!(is_sum_three_squares(0));
        assert!(!is_sum_three_squares(28));
        assert!(!is_sum_three_squares(112));
    }

    #[test]
    fn legendre_agrees_with_search() {
        let flags = TernaryForm::SUM_OF_SQUARES
            .representable_flags(10_000)
            .unwrap();
        for (n, &f) in flags.iter().enumerate() {
            assert_eq!(is_sum_three_squares(n as u64), f, "n={n}");
        }
    }

    #[test]
    fn loeschian_examples() {
        assert_eq!(loeschian_upto(20), 9);
        assert_eq!(loeschian_upto(0), 0);
        assert_eq!(loeschian_upto(1), 1);
        let flags = loeschian_flags(20);
        let set: Vec<usize> = (1..=20).filter(|&n| flags[n]).collect();
        assert_eq!(set, vec![1, 3, 4, 7, 9, 12, 13, 16, 19]);
    }

    #[test]
    fn loeschian_sieve_matches_signed_search() {
        let bound = 2000i64;
        let r = 2 * (bound as f64).sqrt().ceil() as i64;
        let mut brute = vec![false; bound as usize + 1];
        for x in -r..=r {
            for y in -r..=r {
                let v = x * x + x * y + y * y;
                if v <= bound {
                    brute[v as usize] = true;
                }
            }
        }
        assert_eq!(loeschian_flags(bound as u64), brute);
    }
}
