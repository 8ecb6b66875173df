//! The five statistical tests analyzed alongside the pseudorandomness
//! measures: frequency (monobit), block frequency, longest run of ones,
//! linear complexity, and the spectral (DFT) test.
//!
//! P-value conventions follow NIST SP 800-22: `igamc` tails for the
//! chi-square statistics, `erfc` for the normal ones, pass iff
//! `p_value >= alpha` (default 0.01).

pub mod fft;
pub mod lfsr;
pub mod special;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_complex::Complex64;

pub use lfsr::{berlekamp_massey, berlekamp_massey_bits, LfsrFit};
pub use special::{erfc, igamc};

use crate::sequence::BinarySequence;
use crate::{Error, Result};

/// Default significance level.
pub const DEFAULT_ALPHA: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TestId {
    Monobit,
    BlockFrequency,
    LongestRun,
    LinearComplexity,
    Dft,
}

impl TestId {
    /// Canonical suite order.
    pub const ALL: [TestId; 5] = [
        TestId::Monobit,
        TestId::BlockFrequency,
        TestId::LongestRun,
        TestId::LinearComplexity,
        TestId::Dft,
    ];

    pub fn name(self) -> &'static str {
        match self {
            TestId::Monobit => "Monobit",
            TestId::BlockFrequency => "BlockFrequency",
            TestId::LongestRun => "LongestRun",
            TestId::LinearComplexity => "LinearComplexity",
            TestId::Dft => "DFT",
        }
    }
}

/// Outcome of one test on one sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct TestResult {
    pub test: TestId,
    pub statistic: f64,
    pub p_value: f64,
    /// `p_value >= alpha`; set against [`DEFAULT_ALPHA`] by the individual
    /// tests and recomputed by [`run_suite`] for its configured level.
    pub pass: bool,
    pub details: TestDetails,
}

/// Per-test auxiliary values.
#[derive(Debug, Clone, PartialEq)]
pub enum TestDetails {
    Monobit {
        element_sum: i64,
        /// Input below the recommended 100 bits.
        short_input: bool,
    },
    BlockFrequency {
        block_count: usize,
        discarded_bits: usize,
        /// Whether the recommended sizing (M >= 20, M > N/100, t < 100) holds.
        recommended_size: bool,
    },
    LongestRun {
        block_len: usize,
        nu: Vec<u64>,
        pi: Vec<f64>,
        discarded_bits: usize,
    },
    LinearComplexity {
        block_len: usize,
        nu: [u64; 7],
        mean_complexity: f64,
        discarded_bits: usize,
    },
    Dft {
        threshold: f64,
        expected_below: f64,
        observed_below: usize,
        bins: usize,
    },
}

// ---------------------------------------------------------------------------
// Monobit
// ---------------------------------------------------------------------------

/// Frequency test: `s = |sum e_n| / sqrt(N)`, `p = erfc(s / sqrt(2))`.
pub fn monobit(e: &BinarySequence) -> Result<TestResult> {
    let n = e.len();
    let sum = e.element_sum();
    let statistic = sum.unsigned_abs() as f64 / libm::sqrt(n as f64);
    let p_value = erfc(statistic / libm::sqrt(2.0));
    Ok(TestResult {
        test: TestId::Monobit,
        statistic,
        p_value,
        pass: p_value >= DEFAULT_ALPHA,
        details: TestDetails::Monobit {
            element_sum: sum,
            short_input: n < 100,
        },
    })
}

// ---------------------------------------------------------------------------
// Block frequency
// ---------------------------------------------------------------------------

/// Frequency within a block: `X_1 = 4M sum_i (pi_i - 1/2)^2` over
/// `t = floor(N/M)` blocks, `p = igamc(t/2, X_1/2)`. Leftover bits are
/// discarded.
pub fn block_frequency(e: &BinarySequence, m: usize) -> Result<TestResult> {
    let n = e.len();
    if m == 0 {
        return Err(Error::InvalidInput("block length must be positive"));
    }
    let t = n / m;
    if t == 0 {
        return Err(Error::InvalidInput("sequence shorter than one block"));
    }
    // 4M (pi_i - 1/2)^2 = S_i^2 / M for the block sum S_i.
    let mut sq_sum = 0i64;
    for i in 0..t {
        let mut s = 0i64;
        for j in 0..m {
            s += e.get(i * m + j) as i64;
        }
        sq_sum += s * s;
    }
    let statistic = sq_sum as f64 / m as f64;
    let p_value = igamc(t as f64 / 2.0, statistic / 2.0)?;
    Ok(TestResult {
        test: TestId::BlockFrequency,
        statistic,
        p_value,
        pass: p_value >= DEFAULT_ALPHA,
        details: TestDetails::BlockFrequency {
            block_count: t,
            discarded_bits: n - t * m,
            recommended_size: m >= 20 && m > n / 100 && t < 100,
        },
    })
}

// ---------------------------------------------------------------------------
// Longest run of ones
// ---------------------------------------------------------------------------

/// Length of the longest maximal run of `+1` (0 if there is none).
pub fn longest_run_length(bits: impl IntoIterator<Item = bool>) -> usize {
    let mut best = 0usize;
    let mut cur = 0usize;
    for b in bits {
        if b {
            cur += 1;
            best = best.max(cur);
        } else {
            cur = 0;
        }
    }
    best
}

/// Configuration of the longest-run test: block length, the class
/// partition of `{0..M}`, and the exact class probabilities.
#[derive(Debug, Clone, PartialEq)]
pub struct LongestRunConfig {
    pub block_len: usize,
    /// Inclusive `[lo, hi]` run-length classes partitioning `{0..M}`.
    pub classes: Vec<(usize, usize)>,
    /// Class probabilities, computed exactly by [`longest_run_probs`].
    pub pi: Vec<f64>,
    /// Minimum input length accepted by the test.
    pub min_len: usize,
}

impl LongestRunConfig {
    /// Custom partition; probabilities are computed, not copied in.
    pub fn new(block_len: usize, classes: &[(usize, usize)]) -> Result<Self> {
        Self::with_min_len(block_len, classes, block_len)
    }

    fn with_min_len(block_len: usize, classes: &[(usize, usize)], min_len: usize) -> Result<Self> {
        let pi = longest_run_probs(block_len, classes)?;
        let total: f64 = pi.iter().sum();
        if libm::fabs(total - 1.0) > 1e-6 {
            return Err(Error::InvalidInput("class probabilities do not sum to 1"));
        }
        Ok(Self {
            block_len,
            classes: classes.to_vec(),
            pi,
            min_len,
        })
    }

    /// The standard configurations for M = 8, 128, 10^4 with their
    /// minimum input lengths 128, 6272, 750000.
    pub fn standard(block_len: usize) -> Result<Self> {
        match block_len {
            8 => Self::with_min_len(8, &[(0, 1), (2, 2), (3, 3), (4, 8)], 128),
            128 => Self::with_min_len(
                128,
                &[(0, 4), (5, 5), (6, 6), (7, 7), (8, 8), (9, 128)],
                6272,
            ),
            10_000 => Self::with_min_len(
                10_000,
                &[
                    (0, 10),
                    (11, 11),
                    (12, 12),
                    (13, 13),
                    (14, 14),
                    (15, 15),
                    (16, 10_000),
                ],
                750_000,
            ),
            _ => Err(Error::InvalidInput("standard block lengths are 8, 128, 10000")),
        }
    }

    /// Selects the standard configuration for a sequence length, or `None`
    /// below the 128-bit minimum.
    pub fn for_length(n: usize) -> Option<Self> {
        let m = match n {
            0..=127 => return None,
            128..=6271 => 8,
            6272..=749_999 => 128,
            _ => 10_000,
        };
        Some(Self::standard(m).expect("standard tables are valid"))
    }
}

/// Exact class probabilities for the longest +1-run in a random M-bit
/// block.
///
/// Uses the run-bounded string count `A(m, r)` (number of length-m strings
/// with longest run <= r), with `A(m, r) = sum_{j=0}^{r} A(m-1-j, r)` for
/// `m > r` and `2^m` otherwise. Exact 128-bit integers for M <= 128,
/// probability-space renormalization above.
pub fn longest_run_probs(m: usize, classes: &[(usize, usize)]) -> Result<Vec<f64>> {
    validate_partition(m, classes)?;
    let p_le = |r: usize| -> f64 {
        if r >= m {
            return 1.0;
        }
        if m <= 128 {
            let mut a = Vec::with_capacity(m + 1);
            for j in 0..=m {
                if j <= r {
                    a.push(if j < 128 { 1u128 << j } else { u128::MAX });
                } else {
                    let sum: u128 = (0..=r).map(|i| a[j - 1 - i]).sum();
                    a.push(sum);
                }
            }
            a[m] as f64 / libm::exp2(m as f64)
        } else {
            let mut p = Vec::with_capacity(m + 1);
            for j in 0..=m {
                if j <= r {
                    p.push(1.0f64);
                } else {
                    let mut sum = 0.0;
                    let mut w = 0.5;
                    for i in 0..=r {
                        sum += p[j - 1 - i] * w;
                        w *= 0.5;
                    }
                    p.push(sum);
                }
            }
            p[m]
        }
    };
    Ok(classes
        .iter()
        .map(|&(lo, hi)| {
            let upper = p_le(hi);
            let lower = if lo == 0 { 0.0 } else { p_le(lo - 1) };
            upper - lower
        })
        .collect())
}

fn validate_partition(m: usize, classes: &[(usize, usize)]) -> Result<()> {
    if classes.is_empty() {
        return Err(Error::InvalidInput("empty class partition"));
    }
    let mut sorted = classes.to_vec();
    sorted.sort_unstable();
    let mut next = 0usize;
    for &(lo, hi) in &sorted {
        if lo != next || hi < lo {
            return Err(Error::InvalidInput("classes must partition {0..M}"));
        }
        next = hi + 1;
    }
    if next != m + 1 {
        return Err(Error::InvalidInput("classes must partition {0..M}"));
    }
    Ok(())
}

/// Longest-run test: bins the per-block longest runs into the configured
/// classes and compares against the exact probabilities,
/// `X_2 = sum (nu_i - t pi_i)^2 / (t pi_i)`, `p = igamc(K/2, X_2/2)`.
pub fn longest_run_test(e: &BinarySequence, config: &LongestRunConfig) -> Result<TestResult> {
    let n = e.len();
    let m = config.block_len;
    if n < config.min_len {
        return Err(Error::InvalidInput("sequence too short for longest-run test"));
    }
    let t = n / m;
    // Class lookup by run length.
    let mut class_of = alloc::vec![0usize; m + 1];
    for (ci, &(lo, hi)) in config.classes.iter().enumerate() {
        for len in lo..=hi {
            class_of[len] = ci;
        }
    }
    let mut nu = alloc::vec![0u64; config.classes.len()];
    for i in 0..t {
        let run = longest_run_length((0..m).map(|j| e.bit(i * m + j) == 1));
        nu[class_of[run]] += 1;
    }
    let tf = t as f64;
    let statistic: f64 = nu
        .iter()
        .zip(&config.pi)
        .map(|(&v, &p)| {
            let d = v as f64 - tf * p;
            d * d / (tf * p)
        })
        .sum();
    let k = config.classes.len() - 1;
    let p_value = igamc(k as f64 / 2.0, statistic / 2.0)?;
    Ok(TestResult {
        test: TestId::LongestRun,
        statistic,
        p_value,
        pass: p_value >= DEFAULT_ALPHA,
        details: TestDetails::LongestRun {
            block_len: m,
            nu,
            pi: config.pi.clone(),
            discarded_bits: n - t * m,
        },
    })
}

// ---------------------------------------------------------------------------
// Linear complexity
// ---------------------------------------------------------------------------

/// Expected linear complexity of a random M-bit block:
/// `mu_M = M/2 + (4 + (M mod 2)) / 18`.
pub fn expected_linear_complexity(m: usize) -> f64 {
    m as f64 / 2.0 + (4 + m % 2) as f64 / 18.0
}

/// NIST asymptotic class probabilities for the `T_i` bins.
pub const LINEAR_COMPLEXITY_PI: [f64; 7] =
    [0.010417, 0.03125, 0.125, 0.5, 0.25, 0.0625, 0.020833];

/// Linear-complexity test configuration: block length, bin edges for the
/// intervals `I_0 = (-inf, -2.5], I_j = (-2.5+j-1, -2.5+j], I_6 = (2.5, inf)`,
/// and class probabilities.
#[derive(Debug, Clone, PartialEq)]
pub struct LinComplexityConfig {
    pub block_len: usize,
    pub edges: [f64; 6],
    pub pi: [f64; 7],
}

impl LinComplexityConfig {
    pub fn standard(block_len: usize) -> Self {
        Self {
            block_len,
            edges: [-2.5, -1.5, -0.5, 0.5, 1.5, 2.5],
            pi: LINEAR_COMPLEXITY_PI,
        }
    }

    fn classify(&self, t: f64) -> usize {
        self.edges.iter().position(|&e| t <= e).unwrap_or(6)
    }
}

/// Linear-complexity test: Berlekamp-Massey per M-bit block,
/// `T_i = (-1)^M (L_i - mu_M) + 2/9`, bin counts against the asymptotic
/// probabilities, `p = igamc(3, X_3/2)`.
pub fn linear_complexity_test(e: &BinarySequence, config: &LinComplexityConfig) -> Result<TestResult> {
    let n = e.len();
    let m = config.block_len;
    if m == 0 {
        return Err(Error::InvalidInput("block length must be positive"));
    }
    let t = n / m;
    if t == 0 {
        return Err(Error::InvalidInput("sequence shorter than one block"));
    }
    let total: f64 = config.pi.iter().sum();
    if libm::fabs(total - 1.0) > 1e-6 {
        return Err(Error::InvalidInput("class probabilities do not sum to 1"));
    }
    let mu = expected_linear_complexity(m);
    let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
    let mut nu = [0u64; 7];
    let mut l_sum = 0u64;
    for i in 0..t {
        let words = e.extract_bits(i * m, m);
        let fit = berlekamp_massey(&words, m);
        l_sum += fit.complexity as u64;
        let ti = sign * (fit.complexity as f64 - mu) + 2.0 / 9.0;
        nu[config.classify(ti)] += 1;
    }
    let tf = t as f64;
    let statistic: f64 = nu
        .iter()
        .zip(&config.pi)
        .map(|(&v, &p)| {
            let d = v as f64 - tf * p;
            d * d / (tf * p)
        })
        .sum();
    let p_value = igamc(3.0, statistic / 2.0)?;
    Ok(TestResult {
        test: TestId::LinearComplexity,
        statistic,
        p_value,
        pass: p_value >= DEFAULT_ALPHA,
        details: TestDetails::LinearComplexity {
            block_len: m,
            nu,
            mean_complexity: l_sum as f64 / tf,
            discarded_bits: n - t * m,
        },
    })
}

// ---------------------------------------------------------------------------
// Spectral (DFT)
// ---------------------------------------------------------------------------

/// Spectral test: counts DFT moduli below `T = sqrt(N ln(1/0.05))` among
/// bins `1..floor(N/2)` (the DC coefficient is excluded) and compares with
/// the expected `0.95 * N/2` via
/// `d = (N_1 - N_0) / sqrt(N * 0.95 * 0.05 / 4)`, `p = erfc(|d|/sqrt 2)`.
pub fn dft_test(e: &BinarySequence) -> Result<TestResult> {
    let n = e.len();
    if n < 1000 {
        return Err(Error::InvalidInput("spectral test needs at least 1000 elements"));
    }
    let signal: Vec<Complex64> = (0..n)
        .map(|i| Complex64::new(e.get(i) as f64, 0.0))
        .collect();
    let spectrum = fft::dft(&signal);
    let threshold = libm::sqrt(n as f64 * libm::log(1.0 / 0.05));
    let t_sq = threshold * threshold;
    let bins = n / 2 - 1;
    let observed = spectrum[1..=bins]
        .iter()
        .filter(|v| v.norm_sqr() < t_sq)
        .count();
    let expected = 0.95 * n as f64 / 2.0;
    let d = (observed as f64 - expected) / libm::sqrt(n as f64 * 0.95 * 0.05 / 4.0);
    let p_value = erfc(libm::fabs(d) / libm::sqrt(2.0));
    Ok(TestResult {
        test: TestId::Dft,
        statistic: d,
        p_value,
        pass: p_value >= DEFAULT_ALPHA,
        details: TestDetails::Dft {
            threshold,
            expected_below: expected,
            observed_below: observed,
            bins,
        },
    })
}

// ---------------------------------------------------------------------------
// Suite driver
// ---------------------------------------------------------------------------

/// Suite-level parameters.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteParams {
    pub alpha: f64,
    pub block_frequency_m: usize,
    pub linear_complexity_m: usize,
    /// Fixed longest-run block length, or `None` to select by input size.
    pub longest_run_m: Option<usize>,
}

impl Default for SuiteParams {
    fn default() -> Self {
        Self {
            alpha: DEFAULT_ALPHA,
            block_frequency_m: 128,
            linear_complexity_m: 500,
            longest_run_m: None,
        }
    }
}

/// One suite slot: either a completed test or a skip with its reason.
#[derive(Debug, Clone, PartialEq)]
pub enum TestOutcome {
    Done(TestResult),
    Skipped { test: TestId, reason: String },
}

impl TestOutcome {
    pub fn test(&self) -> TestId {
        match self {
            TestOutcome::Done(r) => r.test,
            TestOutcome::Skipped { test, .. } => *test,
        }
    }

    pub fn as_done(&self) -> Option<&TestResult> {
        match self {
            TestOutcome::Done(r) => Some(r),
            TestOutcome::Skipped { .. } => None,
        }
    }
}

/// Runs the five tests in canonical order; unmet per-test preconditions
/// become [`TestOutcome::Skipped`] entries rather than suite failures.
pub fn run_suite(e: &BinarySequence, params: &SuiteParams) -> Vec<TestOutcome> {
    let longest = match params.longest_run_m {
        Some(m) => LongestRunConfig::standard(m),
        None => LongestRunConfig::for_length(e.len())
            .ok_or(Error::InvalidInput("sequence shorter than 128 bits")),
    };
    let lc = LinComplexityConfig::standard(params.linear_complexity_m);
    let runs: [(TestId, Result<TestResult>); 5] = [
        (TestId::Monobit, monobit(e)),
        (TestId::BlockFrequency, block_frequency(e, params.block_frequency_m)),
        (TestId::LongestRun, longest.and_then(|cfg| longest_run_test(e, &cfg))),
        (TestId::LinearComplexity, linear_complexity_test(e, &lc)),
        (TestId::Dft, dft_test(e)),
    ];
    runs.into_iter()
        .map(|(test, res)| match res {
            Ok(mut r) => {
                r.pass = r.p_value >= params.alpha;
                TestOutcome::Done(r)
            }
            Err(err) => TestOutcome::Skipped {
                test,
                reason: format!("{err}"),
            },
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::measures::SplitMix64;
    use crate::sequence::{gen_periodic, gen_thue_morse};

    fn random_seq(n: usize, seed: u64) -> BinarySequence {
        let mut rng = SplitMix64::new(seed);
        BinarySequence::from_bit_fn(n, |_| rng.next() & 1 == 1).unwrap()
    }

    #[test]
    fn monobit_examples() {
        let balanced = BinarySequence::from_bit_fn(100, |i| i % 2 == 0).unwrap();
        let r = monobit(&balanced).unwrap();
        assert_eq!(r.statistic, 0.0);
        assert_eq!(r.p_value, 1.0);
        assert!(r.pass);

        let all_plus = BinarySequence::from_bit_fn(100, |_| true).unwrap();
        let r = monobit(&all_plus).unwrap();
        assert_eq!(r.statistic, 10.0);
        assert!(r.p_value < 1e-20);
        assert!(!r.pass);

        let e = BinarySequence::from_signs(&[1, -1, 1, 1]).unwrap();
        let r = monobit(&e).unwrap();
        assert_eq!(r.statistic, 1.0);
        assert!((r.p_value - 0.3173105078629141).abs() < 1e-12);
        assert!(matches!(
            r.details,
            TestDetails::Monobit { short_input: true, .. }
        ));
    }

    #[test]
    fn monobit_nist_reference() {
        // SP 800-22 example 2.1.8: 100-bit input, P-value 0.109599.
        let bits = "1100100100001111110110101010001000100001011010001100001000110100\
                    110001001100011001100010100010111000";
        let e = crate::sequence::decode_ascii(bits.as_bytes()).unwrap();
        let r = monobit(&e).unwrap();
        assert!((r.p_value - 0.109599).abs() < 5e-7, "{}", r.p_value);
    }

    #[test]
    fn block_frequency_examples() {
        let balanced = BinarySequence::from_bit_fn(400, |i| i % 2 == 0).unwrap();
        let r = block_frequency(&balanced, 20).unwrap();
        assert_eq!(r.statistic, 0.0);
        assert_eq!(r.p_value, 1.0);

        let all_plus = BinarySequence::from_bit_fn(400, |_| true).unwrap();
        let r = block_frequency(&all_plus, 20).unwrap();
        assert_eq!(r.statistic, 400.0);
        // M = 20 >= 20, M > 400/100, t = 20 < 100: sizing recommendation met.
        assert!(matches!(
            r.details,
            TestDetails::BlockFrequency { block_count: 20, recommended_size: true, .. }
        ));

        // One block of 15 ones and 5 minus-ones: pi = 0.75, X1 = 5.
        let e = BinarySequence::from_bit_fn(20, |i| i < 15).unwrap();
        let r = block_frequency(&e, 20).unwrap();
        assert_eq!(r.statistic, 5.0);

        assert!(block_frequency(&e, 0).is_err());
        assert!(block_frequency(&e, 21).is_err());
    }

    #[test]
    fn block_frequency_nist_reference() {
        // SP 800-22 example 2.2.4: "0110011010", M = 3, P-value 0.801252.
        let e = crate::sequence::decode_ascii(b"0110011010").unwrap();
        let r = block_frequency(&e, 3).unwrap();
        assert!((r.p_value - 0.801252).abs() < 5e-7, "{}", r.p_value);
    }

    #[test]
    fn longest_run_length_cases() {
        assert_eq!(longest_run_length([false, false]), 0);
        assert_eq!(longest_run_length([true, true, false, true]), 2);
        assert_eq!(longest_run_length([]), 0);
        // Exhaustive 12-bit check against a scan oracle.
        for v in 0u32..(1 << 12) {
            let bits: alloc::vec::Vec<bool> = (0..12).map(|i| (v >> i) & 1 == 1).collect();
            let mut best = 0;
            for start in 0..12 {
                let mut len = 0;
                for b in &bits[start..] {
                    if !b {
                        break;
                    }
                    len += 1;
                }
                best = best.max(len);
            }
            assert_eq!(longest_run_length(bits.iter().copied()), best);
        }
    }

    #[test]
    fn longest_run_probs_m8_reference() {
        let pi = longest_run_probs(8, &[(0, 1), (2, 2), (3, 3), (4, 8)]).unwrap();
        let reference = [0.2148, 0.3672, 0.2305, 0.1875];
        for (got, expect) in pi.iter().zip(reference) {
            assert!((got - expect).abs() < 5e-5, "{got} vs {expect}");
        }
        // Exact fractions out of 256.
        assert_eq!(pi[0], 55.0 / 256.0);
        assert_eq!(pi[1], 94.0 / 256.0);
        assert_eq!(pi[2], 59.0 / 256.0);
        assert_eq!(pi[3], 48.0 / 256.0);
    }

    #[test]
    fn longest_run_probs_total_and_m128() {
        for m in [2usize, 8, 50, 128, 200] {
            let pi = longest_run_probs(m, &[(0, m)]).unwrap();
            assert!((pi[0] - 1.0).abs() < 1e-12, "m={m}");
        }
        // Recalculated M = 128 class probabilities (independent source).
        let pi = longest_run_probs(128, &[(0, 4), (5, 5), (6, 6), (7, 7), (8, 8), (9, 128)]).unwrap();
        let reference = [
            0.11740357883779325,
            0.2429559592774549,
            0.2493634831790783,
            0.17517706034678193,
            0.10270107130405359,
            0.11239884705483805,
        ];
        for (got, expect) in pi.iter().zip(reference) {
            assert!((got - expect).abs() < 1e-9, "{got} vs {expect}");
        }
    }

    #[test]
    fn longest_run_probs_m2_enumeration() {
        // Strings without "++" among the 4 of length 2: {--, -+, +-}.
        let pi = longest_run_probs(2, &[(0, 1), (2, 2)]).unwrap();
        assert_eq!(pi[0], 0.75);
        assert_eq!(pi[1], 0.25);
    }

    #[test]
    fn invalid_partitions_rejected() {
        assert!(longest_run_probs(8, &[(0, 3), (5, 8)]).is_err()); // gap
        assert!(longest_run_probs(8, &[(0, 4), (4, 8)]).is_err()); // overlap
        assert!(longest_run_probs(8, &[(0, 4)]).is_err()); // not covering
        assert!(longest_run_probs(8, &[]).is_err());
    }

    #[test]
    fn longest_run_test_basics() {
        // All -1: every block lands in the class containing 0.
        let e = BinarySequence::from_bit_fn(256, |_| false).unwrap();
        let cfg = LongestRunConfig::standard(8).unwrap();
        let r = longest_run_test(&e, &cfg).unwrap();
        let TestDetails::LongestRun { nu, pi, .. } = &r.details else {
            panic!()
        };
        assert_eq!(nu[0], 32);
        assert_eq!(nu.iter().sum::<u64>(), 32);
        // X2 = t (1/pi_0 - 1) when everything is in class 0.
        let expect = 32.0 * (1.0 / pi[0] - 1.0);
        assert!((r.statistic - expect).abs() < 1e-9);

        let short = BinarySequence::from_bit_fn(100, |_| true).unwrap();
        assert!(longest_run_test(&short, &cfg).is_err());
    }

    #[test]
    fn longest_run_counts_sum_to_blocks() {
        let e = random_seq(10_000, 77);
        let cfg = LongestRunConfig::standard(8).unwrap();
        let r = longest_run_test(&e, &cfg).unwrap();
        let TestDetails::LongestRun { nu, .. } = &r.details else {
            panic!()
        };
        assert_eq!(nu.iter().sum::<u64>(), 1250);
    }

    #[test]
    fn expected_linear_complexity_value() {
        assert!((expected_linear_complexity(500) - 250.2222222222222).abs() < 1e-12);
        assert!((expected_linear_complexity(13) - (6.5 + 5.0 / 18.0)).abs() < 1e-12);
    }

    #[test]
    fn linear_complexity_classify_edges() {
        let cfg = LinComplexityConfig::standard(500);
        assert_eq!(cfg.classify(-3.0), 0);
        assert_eq!(cfg.classify(-2.5), 0);
        assert_eq!(cfg.classify(-2.4), 1);
        assert_eq!(cfg.classify(0.0), 3);
        assert_eq!(cfg.classify(2.5), 5);
        assert_eq!(cfg.classify(2.51), 6);
    }

    #[test]
    fn linear_complexity_test_runs() {
        let e = random_seq(10_000, 5);
        let cfg = LinComplexityConfig::standard(500);
        let r = linear_complexity_test(&e, &cfg).unwrap();
        let TestDetails::LinearComplexity { nu, mean_complexity, .. } = &r.details else {
            panic!()
        };
        assert_eq!(nu.iter().sum::<u64>(), 20);
        assert!((mean_complexity - 250.22).abs() < 3.0);
        assert!(r.p_value >= 0.0 && r.p_value <= 1.0);

        let short = random_seq(400, 6);
        assert!(linear_complexity_test(&short, &cfg).is_err());
    }

    #[test]
    fn linear_complexity_pi_match_exhaustive_m12() {
        // Enumerate all 2^12 blocks, bin the exact T_i values, and compare
        // with the shipped asymptotic constants.
        let m = 12usize;
        let cfg = LinComplexityConfig::standard(m);
        let mu = expected_linear_complexity(m);
        let mut counts = [0u64; 7];
        for v in 0u32..(1 << m) {
            let bits: alloc::vec::Vec<u8> = (0..m).map(|i| ((v >> i) & 1) as u8).collect();
            let l = berlekamp_massey_bits(&bits).complexity;
            let ti = (l as f64 - mu) + 2.0 / 9.0; // (-1)^12 = +1
            counts[cfg.classify(ti)] += 1;
        }
        let total = (1u64 << m) as f64;
        for (j, (&c, &p)) in counts.iter().zip(&cfg.pi).enumerate() {
            assert!(
                (c as f64 / total - p).abs() < 0.01,
                "class {j}: {} vs {p}",
                c as f64 / total
            );
        }
    }

    #[test]
    fn dft_examples() {
        assert!(dft_test(&random_seq(999, 1)).is_err());
        let r = dft_test(&random_seq(4096, 2)).unwrap();
        assert!(r.pass, "random sequence should pass: p={}", r.p_value);

        // Strongly periodic input fails.
        let pat = BinarySequence::from_signs(&[1, -1, -1, 1]).unwrap();
        let periodic = gen_periodic(&pat, 25_000).unwrap();
        let r = dft_test(&periodic).unwrap();
        assert!(r.p_value < 0.01, "p={}", r.p_value);

        // Thue-Morse fails.
        let tm = gen_thue_morse(100_000).unwrap();
        let r = dft_test(&tm).unwrap();
        assert!(r.p_value < 0.01, "p={}", r.p_value);
    }

    #[test]
    fn suite_ordering_and_skips() {
        let e = random_seq(50, 3);
        let out = run_suite(&e, &SuiteParams::default());
        assert_eq!(out.len(), 5);
        for (slot, id) in out.iter().zip(TestId::ALL) {
            assert_eq!(slot.test(), id);
        }
        // Monobit runs (with a warning detail), the others skip at N = 50.
        assert!(matches!(&out[0], TestOutcome::Done(r)
            if matches!(r.details, TestDetails::Monobit { short_input: true, .. })));
        for slot in &out[1..] {
            assert!(matches!(slot, TestOutcome::Skipped { .. }), "{slot:?}");
        }

        let e = random_seq(10_000, 4);
        let out = run_suite(&e, &SuiteParams::default());
        assert!(out.iter().all(|s| s.as_done().is_some()));
        // Longest-run auto-selects M = 128 in this range.
        let lr = out[2].as_done().unwrap();
        assert!(matches!(
            lr.details,
            TestDetails::LongestRun { block_len: 128, .. }
        ));
    }

    #[test]
    fn suite_alpha_controls_pass() {
        let e = random_seq(10_000, 8);
        let strict = SuiteParams {
            alpha: 1.0,
            ..Default::default()
        };
        let out = run_suite(&e, &strict);
        for slot in out {
            if let TestOutcome::Done(r) = slot {
                assert_eq!(r.pass, r.p_value >= 1.0);
            }
        }
    }
}
