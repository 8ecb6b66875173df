//! Aggregation of per-sequence test results into the final-analysis-style
//! table: P-value decile histogram, uniformity P-value, pass proportion.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::nist::{igamc, TestId, TestResult};
use crate::{Error, Result};

/// Uniformity is flagged below this P-value.
pub const UNIFORMITY_THRESHOLD: f64 = 1e-4;

/// One aggregated row (one test across all sequences).
#[derive(Debug, Clone, PartialEq)]
pub struct TestRow {
    pub test: TestId,
    /// Decile counts C1..C10 of the P-values; bins are half-open with the
    /// last closed, so a P-value of exactly 1.0 lands in C10.
    pub deciles: [usize; 10],
    /// `igamc(9/2, chi^2/2)` for the decile histogram.
    pub uniformity_p: f64,
    pub passed: usize,
    pub total: usize,
    pub uniformity_flag: bool,
    pub proportion_flag: bool,
}

/// Aggregated suite report.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub alpha: f64,
    pub rows: Vec<TestRow>,
}

impl SuiteReport {
    pub fn any_flag(&self) -> bool {
        self.rows.iter().any(|r| r.uniformity_flag || r.proportion_flag)
    }
}

/// Aggregates per-sequence results. Every sequence must have run the same
/// tests in the same order.
pub fn aggregate(per_sequence: &[Vec<TestResult>], alpha: f64) -> Result<SuiteReport> {
    let Some(first) = per_sequence.first() else {
        return Err(Error::InvalidInput("aggregate needs at least one sequence"));
    };
    let ids: Vec<TestId> = first.iter().map(|r| r.test).collect();
    for (i, results) in per_sequence.iter().enumerate() {
        let this: Vec<TestId> = results.iter().map(|r| r.test).collect();
        if this != ids {
            return Err(Error::MismatchedTests(format!(
                "sequence {i} ran {this:?}, expected {ids:?}"
            )));
        }
    }

    let s = per_sequence.len();
    let p_hat = 1.0 - alpha;
    let band = 3.0 * libm::sqrt(p_hat * (1.0 - p_hat) / s as f64);
    let mut rows = Vec::with_capacity(ids.len());
    for (slot, &test) in ids.iter().enumerate() {
        let mut deciles = [0usize; 10];
        let mut passed = 0usize;
        for results in per_sequence {
            let r = &results[slot];
            let bin = ((r.p_value * 10.0) as usize).min(9);
            deciles[bin] += 1;
            if r.p_value >= alpha {
                passed += 1;
            }
        }
        let expected = s as f64 / 10.0;
        let chi2: f64 = deciles
            .iter()
            .map(|&c| {
                let d = c as f64 - expected;
                d * d / expected
            })
            .sum();
        let uniformity_p = igamc(4.5, chi2 / 2.0)?;
        let proportion = passed as f64 / s as f64;
        rows.push(TestRow {
            test,
            deciles,
            uniformity_p,
            passed,
            total: s,
            uniformity_flag: uniformity_p < UNIFORMITY_THRESHOLD,
            proportion_flag: proportion < p_hat - band || proportion > p_hat + band,
        });
    }
    Ok(SuiteReport { alpha, rows })
}

/// Fixed-width text table in the final-analysis-report layout. Byte-stable
/// for identical inputs; asterisks mark uniformity/proportion flags.
pub fn render_text(report: &SuiteReport) -> String {
    let mut out = String::new();
    let rule = "------------------------------------------------------------------------------\n";
    out.push_str(rule);
    out.push_str("RESULTS FOR THE UNIFORMITY OF P-VALUES AND THE PROPORTION OF PASSING SEQUENCES\n");
    out.push_str(rule);
    out.push_str("  C1  C2  C3  C4  C5  C6  C7  C8  C9 C10  P-VALUE   PROPORTION  STATISTICAL TEST\n");
    out.push_str(rule);
    for row in &report.rows {
        for c in row.deciles {
            out.push_str(&format!("{c:>4}"));
        }
        let uni_flag = if row.uniformity_flag { "*" } else { " " };
        let prop_flag = if row.proportion_flag { "*" } else { " " };
        let proportion = format!("{}/{}", row.passed, row.total);
        out.push_str(&format!(
            "  {:<8.6}{uni_flag} {proportion:>10}{prop_flag}  {}\n",
            row.uniformity_p,
            row.test.name()
        ));
    }
    out.push_str(rule);
    out
}

/// Machine-readable emission: one `key=value` record line per test row.
pub fn render_records(report: &SuiteReport) -> String {
    let mut out = String::new();
    for row in &report.rows {
        let deciles: Vec<String> = row.deciles.iter().map(|c| format!("{c}")).collect();
        out.push_str(&format!(
            "test={} deciles={} uniformity_p={:.6} uniformity_flag={} proportion={}/{} proportion_flag={}\n",
            row.test.name(),
            deciles.join(","),
            row.uniformity_p,
            row.uniformity_flag,
            row.passed,
            row.total,
            row.proportion_flag,
        ));
    }
    out
}
