//! End-to-end acceptance criteria. Every criterion runs even when an earlier
//! one fails, and each prints a single PASS/FAIL line:
//!
//! ```text
//! cargo test -p qternary --test acceptance -- --nocapture
//! ```

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use qternary::bailey::{self, PairId};
use qternary::density;
use qternary::genfun;
use qternary::partitions;
use qternary::ternary::{self, FormId, TernaryForm};
use qternary::TruncatedSeries;

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !($cond) {
            return Err(format!($($fmt)+));
        }
    };
}

fn same(label: &str, lhs: &TruncatedSeries, rhs: &TruncatedSeries) -> Outcome {
    match lhs.first_mismatch(rhs) {
        None => Ok(()),
        Some(at) => Err(format!(
            "{label}: first mismatch at q^{at}: {} vs {}",
            lhs.coefficient_or_zero(at).unwrap(),
            rhs.coefficient_or_zero(at).unwrap()
        )),
    }
}

fn ints(s: &TruncatedSeries, upto: i64) -> Vec<i64> {
    (0..upto)
        .map(|n| i64::try_from(s.coefficient_or_zero(n).unwrap()).unwrap())
        .collect()
}

fn timed(limit: Duration, f: impl FnOnce() -> Outcome) -> Outcome {
    let start = Instant::now();
    f()?;
    let took = start.elapsed();
    ensure!(took < limit, "took {took:?}, limit {limit:?}");
    Ok(())
}

const B_ANCHOR: [i64; 7] = [1, 1, -1, 1, 0, 0, -2];
const BBAR_ANCHOR: [i64; 7] = [1, -1, 1, 1, 0, -2, 0];

fn c01_identity_27() -> Outcome {
    timed(Duration::from_secs(60), || {
        same("bbar", &genfun::lhs_27(1000), &ternary::rhs_27(1000))
    })
}

fn c02_identity_28() -> Outcome {
    timed(Duration::from_secs(60), || {
        same("b", &genfun::lhs_28(1000), &ternary::rhs_28(1000))
    })
}

fn c03_termwise_form() -> Outcome {
    same("termwise", &genfun::middle_37(1000), &genfun::lhs_27(1000))
}

fn c04_three_routes() -> Outcome {
    let order = 41;
    let product_b = genfun::lhs_28(order);
    let genfun_b = genfun::b_series_via_genfun(order);
    let product_bbar = genfun::lhs_27(order);
    let genfun_bbar = genfun::bbar_series_via_genfun(order);
    same("b product vs genfun", &product_b, &genfun_b)?;
    same("bbar product vs genfun", &product_bbar, &genfun_bbar)?;
    for n in 0..order {
        let b = partitions::b_oracle(n as u64);
        ensure!(
            b == product_b.coefficient_or_zero(n).unwrap(),
            "B({n}): oracle {b}"
        );
        let bb = partitions::bbar_oracle(n as u64);
        ensure!(
            bb == product_bbar.coefficient_or_zero(n).unwrap(),
            "bbar({n}): oracle {bb}"
        );
    }
    ensure!(
        ints(&product_b, 7) == B_ANCHOR,
        "B anchor {:?}",
        ints(&product_b, 7)
    );
    ensure!(
        ints(&product_bbar, 7) == BBAR_ANCHOR,
        "bbar anchor {:?}",
        ints(&product_bbar, 7)
    );
    Ok(())
}

fn c05_signed_counts() -> Outcome {
    let order = 41;
    for k in 0..=6u32 {
        let g = genfun::genfun_k(k, order);
        for n in 0..order {
            let found = partitions::enumerate(k as u64, n as u64);
            let poly = g.coefficient_or_zero(n).unwrap();
            let top = poly.degree().unwrap_or(0).max(n as usize);
            for m in 0..=top {
                let count = partitions::abar_count_in(&found, m as u64);
                ensure!(
                    BigInt::from(count) == poly.coeff(m),
                    "k={k} m={m} n={n}: oracle {count}, series {}",
                    poly.coeff(m)
                );
            }
        }
    }
    Ok(())
}

fn c06_numerator_expansions() -> Outcome {
    let printed: [&[(u64, i8)]; 3] = [
        &[(1, 1), (2, -1)],
        &[(4, 1), (5, -1), (6, -1), (7, 1)],
        &[
            (9, 1),
            (10, -1),
            (11, -1),
            (12, 1),
            (12, -1),
            (13, 1),
            (14, 1),
            (15, -1),
        ],
    ];
    for (k, want) in (1..=3).zip(printed) {
        let got: Vec<(u64, i8)> = genfun::f_poly(k)
            .monomials
            .iter()
            .map(|m| (m.exponent, m.sign))
            .collect();
        ensure!(got == want, "f_{k}: {got:?}");
    }
    Ok(())
}

fn c07_rewrite() -> Outcome {
    same(
        "rewrite",
        &ternary::rewrite_41(1000),
        &ternary::rhs_27(1000),
    )
}

fn c08_pair_definitions() -> Outcome {
    for pair in [PairId::A, PairId::B] {
        for r in bailey::verify_pair_definition(pair, 8, 300) {
            ensure!(r.passed(), "{r:?}");
        }
        for n in 0..=8 {
            let explicit = bailey::beta_explicit(pair, n, 300);
            let diff = &explicit - &bailey::beta_from_alphas(pair, n, 300);
            ensure!(
                diff.min_exp() <= explicit.min_exp() && diff.terms().next().is_none(),
                "{pair:?} n={n}: residue {:?}",
                diff.terms().next()
            );
        }
    }
    Ok(())
}

fn c09_lemma() -> Outcome {
    for pair in [PairId::A, PairId::B] {
        let r = bailey::verify_bailey_lemma(pair, 500);
        ensure!(r.passed(), "{r:?}");
        let (lhs, rhs) = bailey::bailey_lemma_sides(pair, 500);
        ensure!(
            lhs.power_series_coeffs().is_ok() && rhs.power_series_coeffs().is_ok(),
            "{pair:?}: negative exponents survive"
        );
    }
    for (pair, want) in [(PairId::B, B_ANCHOR), (PairId::A, BBAR_ANCHOR)] {
        let (lhs, rhs) = bailey::bailey_lemma_sides(pair, 7);
        ensure!(ints(&lhs, 7) == want, "{pair:?} lhs {:?}", ints(&lhs, 7));
        ensure!(ints(&rhs, 7) == want, "{pair:?} rhs {:?}", ints(&rhs, 7));
    }
    Ok(())
}

fn c10_splits() -> Outcome {
    same(
        "split bbar",
        &ternary::split_components(FormId::Rhs27, 1000).total(),
        &ternary::rhs_27(1000),
    )?;
    same(
        "split b",
        &ternary::split_components(FormId::Rhs28, 1000).total(),
        &ternary::rhs_28(1000),
    )
}

fn c11_three_squares() -> Outcome {
    let r = density::three_squares_density(&[1000, 1_000_000]);
    ensure!(r.rows[0].count == 835, "count at 1000: {}", r.rows[0].count);
    // |count/X - 5/6| <= 0.002, exactly: 1000·|6·count - 5X| <= 12X
    let (count, x) = (r.rows[1].count as i128, r.rows[1].x as i128);
    ensure!(
        1000 * (6 * count - 5 * x).abs() <= 12 * x,
        "ratio at 10^6: {}",
        r.rows[1].ratio_string()
    );

    let bound = 10_000u64;
    let mut hit = vec![false; bound as usize + 1];
    let mut x = 0;
    while x * x <= bound {
        let mut y = x;
        while x * x + y * y <= bound {
            let mut z = y;
            while x * x + y * y + z * z <= bound {
                hit[(x * x + y * y + z * z) as usize] = true;
                z += 1;
            }
            y += 1;
        }
        x += 1;
    }
    let form = TernaryForm::SUM_OF_SQUARES;
    let searched = form.representable_flags(bound).unwrap();
    for n in 0..=bound {
        let legendre = ternary::is_sum_three_squares(n);
        ensure!(legendre == hit[n as usize], "n={n}: criterion {legendre}");
        ensure!(
            legendre == searched[n as usize],
            "n={n}: form search disagrees"
        );
    }
    Ok(())
}

fn c12_loeschian_decay() -> Outcome {
    let r = density::loeschian_density(&density::DEFAULT_CHECKPOINTS);
    for w in r.rows.windows(2) {
        // count_1/x_1 > count_2/x_2, exactly
        ensure!(
            w[0].count as u128 * w[1].x as u128 > w[1].count as u128 * w[0].x as u128,
            "not decreasing: {:?}",
            r.rows
        );
    }
    let small = density::loeschian_density(&[20]);
    ensure!(
        small.rows[0].count == 9,
        "count at 20: {}",
        small.rows[0].count
    );
    Ok(())
}

fn c13_density_scan() -> Outcome {
    timed(Duration::from_secs(300), || {
        for subject in ["b", "bbar"] {
            let path = std::env::temp_dir().join(format!(
                "qternary-scan-{subject}-{}.csv",
                std::process::id()
            ));
            let code = qternary::cli::run([
                "qternary",
                "density",
                "--subject",
                subject,
                "--checkpoints",
                "1000,10000,100000",
                "--format",
                "csv",
                "--out",
                path.to_str().unwrap(),
            ]);
            ensure!(code == 0, "{subject}: exit code {code}");
            let text = std::fs::read_to_string(&path).map_err(|e| e.to_string())?;
            let _ = std::fs::remove_file(&path);
            let mut lines = text.lines();
            ensure!(
                lines.next() == Some("X,count,ratio"),
                "{subject}: bad header"
            );
            let rows: Vec<&str> = lines.collect();
            ensure!(rows.len() == 3, "{subject}: {} rows", rows.len());
            for (row, x) in rows.iter().zip([1000u64, 10_000, 100_000]) {
                let cells: Vec<&str> = row.split(',').collect();
                ensure!(cells.len() == 3, "{subject}: row `{row}`");
                ensure!(cells[0].parse::<u64>() == Ok(x), "{subject}: row `{row}`");
                let count: u64 = cells[1]
                    .parse()
                    .map_err(|_| format!("{subject}: row `{row}`"))?;
                ensure!(
                    cells[2] == density::format_ratio(count, x),
                    "{subject}: row `{row}`"
                );
                let ratio: f64 = cells[2]
                    .parse()
                    .map_err(|_| format!("{subject}: row `{row}`"))?;
                ensure!(ratio > 0.0 && ratio <= 1.0, "{subject}: ratio {ratio}");
            }
            println!("      {subject}: {}", rows.join(" | "));
        }
        Ok(())
    })
}

fn c14_pruning() -> Outcome {
    same(
        "slack bbar",
        &ternary::lattice_with_slack(FormId::Rhs27, 1000, 10),
        &ternary::rhs_27(1000),
    )?;
    same(
        "slack b",
        &ternary::lattice_with_slack(FormId::Rhs28, 1000, 10),
        &ternary::rhs_28(1000),
    )?;
    same(
        "slack rewrite",
        &ternary::rewrite_41_with_slack(1000, 10),
        &ternary::rewrite_41(1000),
    )
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 14] = [
        (
            "bbar product side = lattice side at 1000 (< 60 s)",
            c01_identity_27,
        ),
        (
            "b product side = lattice side at 1000 (< 60 s)",
            c02_identity_28,
        ),
        (
            "termwise form equals product form at 1000",
            c03_termwise_form,
        ),
        (
            "product, genfun and partition routes agree for n <= 40",
            c04_three_routes,
        ),
        (
            "signed partition counts match genfun_k for k <= 6, n <= 40",
            c05_signed_counts,
        ),
        ("f_1..f_3 monomials and signs", c06_numerator_expansions),
        ("rewritten lattice sum at 1000", c07_rewrite),
        ("pair definitions, n <= 8, order 300", c08_pair_definitions),
        ("lemma sides at 500 and anchors", c09_lemma),
        ("diagonal + off-diagonal at 1000", c10_splits),
        ("three-squares density", c11_three_squares),
        ("Loeschian ratios decrease", c12_loeschian_decay),
        ("b/bbar density scan to 10^5 (< 5 min)", c13_density_scan),
        ("slack-10 boxes agree at 1000", c14_pruning),
    ];

    // start below libtest's `test ... ` prefix
    println!();
    let mut failed = Vec::new();
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(check))
            .unwrap_or_else(|_| Err("panicked".to_string()));
        let took = start.elapsed();
        match outcome {
            Ok(()) => println!("PASS  {:>2}. {name} [{took:.2?}]", i + 1),
            Err(why) => {
                println!("FAIL  {:>2}. {name} [{took:.2?}]: {why}", i + 1);
                failed.push(i + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
