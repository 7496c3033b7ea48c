//! The `qternary` command line.
//!
//! ```text
//! qternary verify  --id ID --order N [--n-max M]
//! qternary compute --table {b|bbar|a-grid} [--k K] --max-n N --format {csv|json}
//! qternary density --subject {b|bbar|three-squares|loeschian|form:a,b,c,r,s,t} --checkpoints X1,X2,...
//! qternary split   --id {2.7|2.8} --order N
//! ```
//!
//! Every subcommand takes `--format {table|csv|json}` and `--out PATH`.
//! Exit status: 0 on success or all checks passing, 1 if any check fails,
//! 2 on a usage error.

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::bailey::{self, PairId};
use crate::coeff::Coefficient;
use crate::density::{self, DensityReport};
use crate::error::{Error, Result};
use crate::genfun::{self, CoefficientTable, TableName};
use crate::partitions;
use crate::report::VerificationReport;
use crate::series::TruncatedSeries;
use crate::ternary::{self, FormId, TernaryForm};

type Series = TruncatedSeries<BigInt>;

/// Partition enumeration is exponential; oracle comparisons stop here.
pub const ORACLE_MAX_N: i64 = 60;

#[derive(Parser, Debug)]
#[command(
    name = "qternary",
    version,
    about = "Exact q-series identities, partition tables and density scans"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check an identity coefficient by coefficient below --order.
    Verify {
        #[arg(long, value_enum)]
        id: CheckId,
        #[arg(long)]
        order: u64,
        /// Largest n for pair checks, largest k for the partition oracle.
        #[arg(long)]
        n_max: Option<u32>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Print a coefficient table.
    Compute {
        #[arg(long, value_enum)]
        table: TableKind,
        /// Profile k for the a-graded grid.
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        max_n: u64,
        /// How b/bbar are computed.
        #[arg(long, value_enum, default_value_t = Route::Lattice)]
        route: Route,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Count n in [1, X] satisfying a predicate at each checkpoint X.
    Density {
        #[arg(long)]
        subject: Subject,
        #[arg(long, value_delimiter = ',', required = true)]
        checkpoints: Vec<u64>,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Diagonal / off-diagonal split of a lattice series.
    Split {
        #[arg(long, value_parser = parse_form_id)]
        id: FormId,
        #[arg(long)]
        order: u64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(clap::Args, Debug)]
pub struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Format::Table)]
    pub format: Format,
    /// Write to this file instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Csv,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    B,
    Bbar,
    AGrid,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Route {
    /// Lattice sums (fast).
    Lattice,
    /// Sum of the partition generating functions.
    Genfun,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CheckId {
    /// Product side vs lattice side of the B̄ identity.
    #[value(name = "2.7")]
    Id27,
    /// Product side vs lattice side of the B identity.
    #[value(name = "2.8")]
    Id28,
    /// Middle product form vs the B̄ product form.
    #[value(name = "3.7-termwise")]
    Termwise37,
    /// Partition enumeration vs the a-graded generating functions.
    #[value(name = "3.1-oracle")]
    Oracle31,
    /// B and B̄ through product form, generating functions and enumeration.
    #[value(name = "3.2-routes")]
    Routes32,
    /// Rewritten lattice sum vs the B̄ lattice side.
    #[value(name = "4.1")]
    Rewrite41,
    /// Defining relation of pair A.
    #[value(name = "pair-def-A")]
    PairDefA,
    /// Defining relation of pair B.
    #[value(name = "pair-def-B")]
    PairDefB,
    /// Both sides of the Bailey lemma for pair A.
    #[value(name = "lemma-2.2-A")]
    LemmaA,
    /// Both sides of the Bailey lemma for pair B.
    #[value(name = "lemma-2.2-B")]
    LemmaB,
    /// Diagonal + off-diagonal = full lattice sum (B̄).
    #[value(name = "split-2.7")]
    Split27,
    /// Diagonal + off-diagonal = full lattice sum (B).
    #[value(name = "split-2.8")]
    Split28,
    /// Legendre's criterion vs exhaustive three-square search.
    #[value(name = "legendre-oracle")]
    LegendreOracle,
}

impl CheckId {
    pub fn name(self) -> &'static str {
        match self {
            CheckId::Id27 => "2.7",
            CheckId::Id28 => "2.8",
            CheckId::Termwise37 => "3.7-termwise",
            CheckId::Oracle31 => "3.1-oracle",
            CheckId::Routes32 => "3.2-routes",
            CheckId::Rewrite41 => "4.1",
            CheckId::PairDefA => "pair-def-A",
            CheckId::PairDefB => "pair-def-B",
            CheckId::LemmaA => "lemma-2.2-A",
            CheckId::LemmaB => "lemma-2.2-B",
            CheckId::Split27 => "split-2.7",
            CheckId::Split28 => "split-2.8",
            CheckId::LegendreOracle => "legendre-oracle",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Subject {
    B,
    Bbar,
    ThreeSquares,
    Loeschian,
    Form(TernaryForm),
}

impl std::str::FromStr for Subject {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "b" => Ok(Subject::B),
            "bbar" => Ok(Subject::Bbar),
            "three-squares" => Ok(Subject::ThreeSquares),
            "loeschian" => Ok(Subject::Loeschian),
            other => match other.strip_prefix("form:") {
                Some(f) => Ok(Subject::Form(f.parse()?)),
                None => Err(Error::Usage(format!("unknown subject `{other}`"))),
            },
        }
    }
}

fn parse_form_id(s: &str) -> Result<FormId> {
    s.parse()
}

/// Run every comparison behind a check id.
pub fn run_check(id: CheckId, order: i64, n_max: Option<u32>) -> Vec<VerificationReport> {
    let name = id.name();
    let cmp = |l: &Series, r: &Series| vec![VerificationReport::compare_series(name, order, l, r)];
    match id {
        CheckId::Id27 => cmp(&genfun::lhs_27(order), &ternary::rhs_27(order)),
        CheckId::Id28 => cmp(&genfun::lhs_28(order), &ternary::rhs_28(order)),
        CheckId::Termwise37 => cmp(&genfun::middle_37(order), &genfun::lhs_27(order)),
        CheckId::Rewrite41 => cmp(&ternary::rewrite_41(order), &ternary::rhs_27(order)),
        CheckId::Oracle31 => {
            let k_max = n_max.unwrap_or(6);
            let o = order.min(ORACLE_MAX_N);
            (0..=k_max).map(|k| oracle_vs_genfun(k, o)).collect()
        }
        CheckId::Routes32 => routes_check(order),
        CheckId::PairDefA => bailey::verify_pair_definition(PairId::A, n_max.unwrap_or(8), order),
        CheckId::PairDefB => bailey::verify_pair_definition(PairId::B, n_max.unwrap_or(8), order),
        CheckId::LemmaA => vec![bailey::verify_bailey_lemma(PairId::A, order)],
        CheckId::LemmaB => vec![bailey::verify_bailey_lemma(PairId::B, order)],
        CheckId::Split27 => {
            let s = ternary::split_components(FormId::Rhs27, order);
            cmp(&s.total(), &ternary::rhs_27(order))
        }
        CheckId::Split28 => {
            let s = ternary::split_components(FormId::Rhs28, order);
            cmp(&s.total(), &ternary::rhs_28(order))
        }
        CheckId::LegendreOracle => {
            let bound = (order - 1).max(0) as u64;
            let flags = TernaryForm::SUM_OF_SQUARES
                .representable_flags(bound)
                .expect("positive definite");
            let as_int = |b: bool| BigInt::from(u8::from(b));
            let l: Vec<BigInt> = (0..order.max(0) as u64)
                .map(|n| as_int(ternary::is_sum_three_squares(n)))
                .collect();
            let r: Vec<BigInt> = flags
                .into_iter()
                .take(order.max(0) as usize)
                .map(as_int)
                .collect();
            vec![VerificationReport::compare_values(name, order, &l, &r)]
        }
    }
}

fn oracle_vs_genfun(k: u32, order: i64) -> VerificationReport {
    let id = format!("3.1-oracle[k={k}]");
    let g = genfun::genfun_k(k, order);
    for n in 0..order {
        let poly = g.coefficient_or_zero(n).expect("below order");
        let found = partitions::enumerate(k as u64, n as u64);
        let max_m = found.iter().map(|q| q.m as usize).max().unwrap_or(0);
        let top = poly.degree().unwrap_or(0).max(max_m);
        for m in 0..=top {
            let count = BigInt::from(partitions::abar_count_in(&found, m as u64));
            let coeff = poly.coeff(m);
            if count != coeff {
                return VerificationReport::fail(
                    id,
                    order,
                    n,
                    format!("{count} (a^{m})"),
                    format!("{coeff} (a^{m})"),
                );
            }
        }
    }
    VerificationReport::pass(id, order)
}

fn routes_check(order: i64) -> Vec<VerificationReport> {
    let oracle_order = order.min(ORACLE_MAX_N);
    let b_oracle: Vec<BigInt> = (0..oracle_order)
        .map(|n| partitions::b_oracle(n as u64))
        .collect();
    let bbar_oracle: Vec<BigInt> = (0..oracle_order)
        .map(|n| partitions::bbar_oracle(n as u64))
        .collect();
    let lhs28 = genfun::lhs_28(order);
    let lhs27 = genfun::lhs_27(order);
    let head = |s: &Series| -> Vec<BigInt> {
        s.power_series_coeffs()
            .expect("power series")
            .into_iter()
            .take(oracle_order as usize)
            .collect()
    };
    vec![
        VerificationReport::compare_series(
            "3.2-routes[b:product-vs-genfun]",
            order,
            &lhs28,
            &genfun::b_series_via_genfun(order),
        ),
        VerificationReport::compare_values(
            "3.2-routes[b:product-vs-enumeration]",
            oracle_order,
            &head(&lhs28),
            &b_oracle,
        ),
        VerificationReport::compare_series(
            "3.2-routes[bbar:product-vs-genfun]",
            order,
            &lhs27,
            &genfun::bbar_series_via_genfun(order),
        ),
        VerificationReport::compare_values(
            "3.2-routes[bbar:product-vs-enumeration]",
            oracle_order,
            &head(&lhs27),
            &bbar_oracle,
        ),
    ]
}

/// Table of `B` / `B̄` values by the chosen route.
pub fn coefficient_table(name: TableName, max_n: u64, route: Route) -> CoefficientTable {
    match (name, route) {
        (_, Route::Lattice) => density::lattice_table(name, max_n),
        (TableName::B, Route::Genfun) => genfun::b_table(max_n),
        (TableName::Bbar, Route::Genfun) => genfun::bbar_table(max_n),
    }
}

pub fn density_report(subject: &Subject, checkpoints: &[u64]) -> Result<DensityReport> {
    let max = checkpoints.iter().copied().max().unwrap_or(0);
    match subject {
        Subject::B => {
            density::nonzero_density(&density::lattice_table(TableName::B, max), checkpoints)
        }
        Subject::Bbar => {
            density::nonzero_density(&density::lattice_table(TableName::Bbar, max), checkpoints)
        }
        Subject::ThreeSquares => Ok(density::three_squares_density(checkpoints)),
        Subject::Loeschian => Ok(density::loeschian_density(checkpoints)),
        Subject::Form(f) => density::form_density(f, checkpoints),
    }
}

// ---- rendering ----

fn render_rows(format: Format, header: &[&str], rows: &[Vec<String>], meta: Value) -> String {
    let mut out = String::new();
    match format {
        Format::Csv => {
            out.push_str(&header.join(","));
            out.push('\n');
            for r in rows {
                out.push_str(&r.join(","));
                out.push('\n');
            }
        }
        Format::Json => {
            let rows: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let obj = header
                        .iter()
                        .zip(r)
                        .map(|(h, v)| (h.to_string(), Value::String(v.clone())))
                        .collect();
                    Value::Object(obj)
                })
                .collect();
            let mut doc = meta;
            doc["rows"] = Value::Array(rows);
            out = serde_json::to_string_pretty(&doc).expect("serialisable");
            out.push('\n');
        }
        Format::Table => {
            if let Some(note) = meta.get("note").and_then(Value::as_str) {
                let _ = writeln!(out, "# {note}");
            }
            let widths: Vec<usize> = header
                .iter()
                .enumerate()
                .map(|(c, h)| {
                    rows.iter()
                        .map(|r| r[c].len())
                        .chain([h.len()])
                        .max()
                        .unwrap_or(0)
                })
                .collect();
            let line = |cells: Vec<&str>| {
                cells
                    .iter()
                    .zip(&widths)
                    .map(|(c, w)| format!("{c:>w$}"))
                    .collect::<Vec<_>>()
                    .join("  ")
            };
            let _ = writeln!(out, "{}", line(header.to_vec()));
            for r in rows {
                let _ = writeln!(out, "{}", line(r.iter().map(String::as_str).collect()));
            }
        }
    }
    out
}

pub fn render_verification(reports: &[VerificationReport], format: Format) -> String {
    let rows: Vec<Vec<String>> = reports
        .iter()
        .map(|r| {
            let mut row = vec![
                r.check_id.clone(),
                r.order.to_string(),
                r.status.to_string(),
                r.first_mismatch.map(|e| e.to_string()).unwrap_or_default(),
            ];
            if format != Format::Csv {
                row.push(r.lhs_coeff.clone().unwrap_or_default());
                row.push(r.rhs_coeff.clone().unwrap_or_default());
            }
            row
        })
        .collect();
    let mut header = vec!["check_id", "order", "status", "first_mismatch"];
    if format != Format::Csv {
        header.extend(["lhs_coeff", "rhs_coeff"]);
    }
    if format == Format::Json {
        let doc = json!({ "reports": reports });
        return serde_json::to_string_pretty(&doc).expect("serialisable") + "\n";
    }
    render_rows(format, &header, &rows, json!({}))
}

pub fn render_table(table: &CoefficientTable, format: Format) -> String {
    let rows: Vec<Vec<String>> = table
        .values
        .iter()
        .enumerate()
        .map(|(n, v)| vec![n.to_string(), v.to_string()])
        .collect();
    render_rows(
        format,
        &["n", "coefficient"],
        &rows,
        json!({ "table": table.name.as_str() }),
    )
}

pub fn render_a_grid(k: u32, max_n: u64, format: Format) -> String {
    let g = genfun::genfun_k(k, max_n as i64 + 1);
    let mut rows = Vec::new();
    for n in 0..=max_n as i64 {
        let p = g.coefficient_or_zero(n).expect("below order");
        for (m, c) in p.coeffs().iter().enumerate() {
            if !Coefficient::is_zero(c) {
                rows.push(vec![
                    k.to_string(),
                    m.to_string(),
                    n.to_string(),
                    c.to_string(),
                ]);
            }
        }
    }
    render_rows(
        format,
        &["k", "m", "n", "coefficient"],
        &rows,
        json!({ "table": "a-grid", "k": k }),
    )
}

pub fn render_density(report: &DensityReport, format: Format) -> String {
    let rows: Vec<Vec<String>> = report
        .rows
        .iter()
        .map(|r| vec![r.x.to_string(), r.count.to_string(), r.ratio_string()])
        .collect();
    render_rows(
        format,
        &["X", "count", "ratio"],
        &rows,
        json!({ "subject": report.subject, "note": format!("{}: count of 1 <= n <= X", report.subject) }),
    )
}

pub fn render_split(split: &ternary::ComponentExpansion, format: Format) -> String {
    let total = split.total();
    let rows: Vec<Vec<String>> = (0..total.order())
        .map(|n| {
            let d = split.diagonal.coefficient_or_zero(n).expect("below order");
            let o = split
                .off_diagonal
                .coefficient_or_zero(n)
                .expect("below order");
            let t = total.coefficient_or_zero(n).expect("below order");
            vec![n.to_string(), d.to_string(), o.to_string(), t.to_string()]
        })
        .collect();
    let id = match split.form {
        FormId::Rhs27 => "2.7",
        FormId::Rhs28 => "2.8",
    };
    render_rows(
        format,
        &["n", "diagonal", "off_diagonal", "total"],
        &rows,
        json!({ "id": id }),
    )
}

fn emit(output: &OutputArgs, text: &str) -> Result<()> {
    match &output.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

/// Parse `argv` (program name first) and execute. Returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(command: Command) -> Result<i32> {
    match command {
        Command::Verify {
            id,
            order,
            n_max,
            output,
        } => {
            let reports = run_check(id, order as i64, n_max);
            emit(&output, &render_verification(&reports, output.format))?;
            Ok(if reports.iter().all(VerificationReport::passed) {
                0
            } else {
                1
            })
        }
        Command::Compute {
            table,
            k,
            max_n,
            route,
            output,
        } => {
            let text = match table {
                TableKind::B => render_table(
                    &coefficient_table(TableName::B, max_n, route),
                    output.format,
                ),
                TableKind::Bbar => render_table(
                    &coefficient_table(TableName::Bbar, max_n, route),
                    output.format,
                ),
                TableKind::AGrid => {
                    let k = k.ok_or_else(|| Error::Usage("--table a-grid needs --k".into()))?;
                    render_a_grid(k, max_n, output.format)
                }
            };
            emit(&output, &text)?;
            Ok(0)
        }
        Command::Density {
            subject,
            checkpoints,
            output,
        } => {
            let report = density_report(&subject, &checkpoints)?;
            emit(&output, &render_density(&report, output.format))?;
            Ok(0)
        }
        Command::Split { id, order, output } => {
            let split = ternary::split_components(id, order as i64);
            emit(&output, &render_split(&split, output.format))?;
            Ok(0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn check_names_round_trip() {
        for id in CheckId::value_variants() {
            let parsed = CheckId::from_str(id.name(), false).unwrap();
            assert_eq!(parsed, *id);
        }
        assert_eq!(CheckId::PairDefA.name(), "pair-def-A");
    }

    #[test]
    fn subjects_parse() {
        assert_eq!("bbar".parse::<Subject>().unwrap(), Subject::Bbar);
        assert_eq!(
            "form:1,1,1,0,0,0".parse::<Subject>().unwrap(),
            Subject::Form(TernaryForm::SUM_OF_SQUARES)
        );
        assert!("form:1,2".parse::<Subject>().is_err());
        assert!("nope".parse::<Subject>().is_err());
    }

    #[test]
    fn table_csv() {
        let t = coefficient_table(TableName::B, 6, Route::Lattice);
        assert_eq!(
            render_table(&t, Format::Csv),
            "n,coefficient\n0,1\n1,1\n2,-1\n3,1\n4,0\n5,0\n6,-2\n"
        );
    }

    #[test]
    fn every_check_passes_at_small_order() {
        for id in CheckId::value_variants() {
            for r in run_check(*id, 30, Some(3)) {
                assert!(r.passed(), "{r:?}");
            }
        }
    }

    #[test]
    fn failing_report_renders_mismatch() {
        let r = VerificationReport::fail("x", 5, 3, 1, 2);
        let csv = render_verification(&[r], Format::Csv);
        assert_eq!(csv, "check_id,order,status,first_mismatch\nx,5,FAIL,3\n");
    }

    #[test]
    fn usage_errors_exit_2() {
        assert_eq!(
            run(["qternary", "verify", "--id", "no-such", "--order", "5"]),
            2
        );
        assert_eq!(run(["qternary", "frobnicate"]), 2);
        assert_eq!(
            run([
                "qternary",
                "density",
                "--subject",
                "form:1,1,-1,0,0,0",
                "--checkpoints",
                "10"
            ]),
            2
        );
    }
}
