//! The pseudorandomness measures: well-distribution `W`, correlation `C_k`,
//! combined `Q_k`, and normality `N_k`, each returned with the witness
//! attaining the maximum and an exactness flag.
//!
//! Search spaces are driven by [`SearchBounds`]. Lag tuples are enumerated
//! in the normalized form `d_1 = 0`; together with maximization over all
//! contiguous runs (not just prefixes) this covers exactly the definitional
//! tuple space, and `d_max` caps the largest lag of the normalized tuple
//! (equivalently the lag span). Witnesses are reported in definitional
//! coordinates, so re-evaluating the defining sum at the witness always
//! reproduces the value.
//!
//! All measure values are integers or integer multiples of `2^-k`, so the
//! `f64` in [`MeasureResult::value`] is exact.

use alloc::vec::Vec;

use crate::sequence::BinarySequence;
use crate::{Error, Result};

/// Caps on the searched parameter space.
///
/// `None` means unbounded, which is only honored when the implied work
/// estimate stays below `work_budget` inner operations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBounds {
    /// Cap on the progression step `b` (W and Q searches).
    pub b_max: Option<u64>,
    /// Cap on the largest normalized lag `d_k` (C and Q searches).
    pub d_max: Option<u64>,
    /// Random lag tuples tried beyond the exhaustive window (C search).
    pub sample_count: u64,
    /// Seed for the sampled tuples.
    pub seed: u64,
    /// Budget gating unbounded searches, in inner operations.
    pub work_budget: u64,
}

pub const DEFAULT_WORK_BUDGET: u64 = 1_000_000_000;

impl SearchBounds {
    /// Fully exhaustive search (budget-gated).
    pub fn exact() -> Self {
        Self {
            b_max: None,
            d_max: None,
            sample_count: 0,
            seed: 0,
            work_budget: DEFAULT_WORK_BUDGET,
        }
    }

    pub fn restricted(b_max: u64, d_max: u64) -> Self {
        Self {
            b_max: Some(b_max),
            d_max: Some(d_max),
            sample_count: 0,
            seed: 0,
            work_budget: DEFAULT_WORK_BUDGET,
        }
    }

    pub fn with_samples(mut self, sample_count: u64, seed: u64) -> Self {
        self.sample_count = sample_count;
        self.seed = seed;
        self
    }

    /// Default policy: exhaustive when the order-k combined-measure sweep
    /// fits the budget, otherwise `b_max = 64`, `d_max = 32`, 10^4 samples.
    pub fn auto(n: usize, k: usize) -> Self {
        let est = (n as u128)
            .saturating_mul(n as u128)
            .saturating_mul(binomial_saturating(
                n.saturating_sub(1) as u128,
                k.saturating_sub(1) as u128,
            ));
        if est < DEFAULT_WORK_BUDGET as u128 {
            Self::exact()
        } else {
            Self::restricted(64, 32).with_samples(10_000, 0)
        }
    }
}

/// The maximizing parameters of a measure, in the coordinates of its
/// defining formula (element indices and `M` are 1-based, lags 0-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// W: `|sum_{j=0}^{t-1} e_{a+jb}|`.
    Progression { a: usize, b: usize, t: usize },
    /// C_k: `|sum_{n=1}^{m} e_{n+d_1} ... e_{n+d_k}|`.
    LaggedPrefix { lags: Vec<usize>, m: usize },
    /// Q_k: `|sum_{j=0}^{t} e_{a+jb+d_1} ... e_{a+jb+d_k}|` (t+1 terms).
    LaggedProgression {
        a: usize,
        b: usize,
        t: usize,
        lags: Vec<usize>,
    },
    /// N_k: `||{n in [0, m-1]: window = pattern}| - m/2^k|`.
    Pattern { pattern: Vec<i8>, m: usize },
}

/// A measure value with its witness.
///
/// When `exact` is false the searched space was restricted and `value` is
/// a certified lower bound of the definitional maximum.
#[derive(Debug, Clone, PartialEq)]
pub struct MeasureResult {
    pub value: f64,
    pub witness: Witness,
    pub exact: bool,
}

// ---------------------------------------------------------------------------
// Well-distribution measure
// ---------------------------------------------------------------------------

/// `W(E_N) = max |sum_{j=0}^{t-1} e_{a+jb}|` over `1 <= a <= a+(t-1)b <= N`.
///
/// One pass per progression class tracks the prefix-sum extrema, which
/// maximizes over `(a, t)` jointly; ties break to the smallest `(b, a, t)`.
pub fn well_distribution(e: &BinarySequence, bounds: &SearchBounds) -> Result<MeasureResult> {
    let n = e.len();
    if n == 0 {
        return Err(Error::InvalidInput("empty sequence"));
    }
    let b_cap = effective_cap(bounds.b_max, n);
    if bounds.b_max.is_none() {
        check_budget(n as u128 * b_cap as u128, bounds)?;
    }

    let mut best = i64::MIN;
    let mut wit = (usize::MAX, usize::MAX, usize::MAX); // (b, a, t)
    for b in 1..=b_cap {
        for r in 1..=b.min(n) {
            // A class of length len satisfies max|sum| <= len, so classes
            // strictly shorter than the current best cannot contribute.
            let len = (n - r) / b + 1;
            if best > 0 && (len as i64) < best {
                continue;
            }
            let mut s = 0i64;
            let (mut min_s, mut min_i) = (0i64, 0usize);
            let (mut max_s, mut max_i) = (0i64, 0usize);
            let mut j = 0usize;
            let mut pos = r;
            while pos <= n {
                s += (2 * e.bit(pos - 1) as i64) - 1;
                j += 1;
                let c1 = s - min_s;
                if c1 >= best {
                    let w = (b, r + min_i * b, j - min_i);
                    if c1 > best || w < wit {
                        best = c1;
                        wit = w;
                    }
                }
                let c2 = max_s - s;
                if c2 >= best {
                    let w = (b, r + max_i * b, j - max_i);
                    if c2 > best || w < wit {
                        best = c2;
                        wit = w;
                    }
                }
                if s < min_s {
                    min_s = s;
                    min_i = j;
                }
                if s > max_s {
                    max_s = s;
                    max_i = j;
                }
                pos += b;
            }
        }
    }
    Ok(MeasureResult {
        value: best as f64,
        witness: Witness::Progression {
            a: wit.1,
            b: wit.0,
            t: wit.2,
        },
        exact: n == 1 || b_cap >= n - 1,
    })
}

// ---------------------------------------------------------------------------
// Correlation measure
// ---------------------------------------------------------------------------

/// `C_k(E_N) = max |sum_{n=1}^{M} e_{n+d_1} ... e_{n+d_k}|` over
/// `0 <= d_1 < ... < d_k <= N - M`.
///
/// Exhaustive over normalized tuples with `d_k <= d_max`, plus
/// `sample_count` seeded random tuples with larger span. `exact` is set iff
/// the cap reaches `N - 1`.
pub fn correlation(e: &BinarySequence, k: usize, bounds: &SearchBounds) -> Result<MeasureResult> {
    let n = e.len();
    if k == 0 || k > n {
        return Err(Error::InvalidInput("correlation order must satisfy 1 <= k <= N"));
    }
    let d_cap = effective_cap(bounds.d_max, n);
    if k > 1 && d_cap < k - 1 && bounds.sample_count == 0 {
        return Err(Error::InvalidInput("d_max leaves no admissible lag tuple"));
    }
    if bounds.d_max.is_none() {
        let est = binomial_saturating(d_cap as u128, k as u128 - 1).saturating_mul(n as u128);
        check_budget(est, bounds)?;
    }

    let mut best = CorrBest::new();
    let mut lags = Vec::with_capacity(k);
    lags.push(0usize);
    enumerate_tuples(&mut lags, 1, k - 1, d_cap, &mut |lags| {
        scan_correlation_tuple(e, lags, &mut best);
    });

    // Seeded samples from the full tuple space; tuples already inside the
    // exhaustive window are skipped, keeping the candidate stream
    // independent of d_max (so enlarging d_max never loses a candidate).
    if k > 1 && bounds.sample_count > 0 && n >= k {
        let mut rng = SplitMix64::new(bounds.seed);
        for _ in 0..bounds.sample_count {
            let lags = sample_lags(&mut rng, k, n);
            if *lags.last().unwrap() > d_cap {
                scan_correlation_tuple(e, &lags, &mut best);
            }
        }
    }

    let (value, lags, m) = best.take()?;
    Ok(MeasureResult {
        value: value as f64,
        witness: Witness::LaggedPrefix { lags, m },
        exact: d_cap >= n - 1,
    })
}

struct CorrBest {
    value: i64,
    lags: Vec<usize>,
    m: usize,
}

impl CorrBest {
    fn new() -> Self {
        Self {
            value: i64::MIN,
            lags: Vec::new(),
            m: 0,
        }
    }

    #[inline]
    fn consider(&mut self, v: i64, base: &[usize], shift: usize, m: usize) {
        if v < self.value {
            return;
        }
        if v > self.value {
            self.value = v;
            self.lags.clear();
            self.lags.extend(base.iter().map(|&d| d + shift));
            self.m = m;
            return;
        }
        // Tie: keep the lexicographically smaller (lags, m).
        let cand_cmp = base
            .iter()
            .map(|&d| d + shift)
            .cmp(self.lags.iter().copied())
            .then(m.cmp(&self.m));
        if cand_cmp == core::cmp::Ordering::Less {
            self.lags.clear();
            self.lags.extend(base.iter().map(|&d| d + shift));
            self.m = m;
        }
    }

    fn take(self) -> Result<(i64, Vec<usize>, usize)> {
        if self.value == i64::MIN {
            return Err(Error::InvalidInput("search space is empty"));
        }
        Ok((self.value, self.lags, self.m))
    }
}

fn scan_correlation_tuple(e: &BinarySequence, lags: &[usize], best: &mut CorrBest) {
    let n = e.len();
    let k_par = (lags.len() & 1) as u64;
    let d_k = *lags.last().unwrap();
    let u_len = n - d_k;
    // max|prefix sum| <= u_len: a shorter window cannot beat the best.
    if best.value > 0 && (u_len as i64) < best.value {
        return;
    }
    let mut s = 0i64;
    let (mut min_s, mut min_i) = (0i64, 0usize);
    let (mut max_s, mut max_i) = (0i64, 0usize);
    for j in 1..=u_len {
        let m0 = j - 1;
        let mut parity = 0u64;
        for &d in lags {
            parity ^= e.bit(m0 + d);
        }
        s += if parity == k_par { 1 } else { -1 };
        best.consider(s - min_s, lags, min_i, j - min_i);
        best.consider(max_s - s, lags, max_i, j - max_i);
        if s < min_s {
            min_s = s;
            min_i = j;
        }
        if s > max_s {
            max_s = s;
            max_i = j;
        }
    }
}

// ---------------------------------------------------------------------------
// Combined measure
// ---------------------------------------------------------------------------

/// `Q_k(E_N) = max |sum_{j=0}^{t} e_{a+jb+d_1} ... e_{a+jb+d_k}|` over all
/// progressions and normalized lag tuples with every subscript in `[1, N]`.
/// The sum has `t + 1` terms, so `t = 0` (a single term) is admissible.
/// Ties break to the smallest `(b, a, t, lags)`.
pub fn combined_measure(e: &BinarySequence, k: usize, bounds: &SearchBounds) -> Result<MeasureResult> {
    let n = e.len();
    if k == 0 || k > n {
        return Err(Error::InvalidInput("combined order must satisfy 1 <= k <= N"));
    }
    let b_cap = effective_cap(bounds.b_max, n);
    let d_cap = effective_cap(bounds.d_max, n);
    if k > 1 && d_cap < k - 1 {
        return Err(Error::InvalidInput("d_max leaves no admissible lag tuple"));
    }
    if bounds.b_max.is_none() || bounds.d_max.is_none() {
        let est = binomial_saturating(d_cap as u128, k as u128 - 1)
            .saturating_mul(n as u128)
            .saturating_mul(b_cap as u128);
        check_budget(est, bounds)?;
    }

    let mut best = i64::MIN;
    let mut wit_abt = (usize::MAX, usize::MAX, usize::MAX);
    let mut wit_lags: Vec<usize> = Vec::new();
    let mut lags = Vec::with_capacity(k);
    lags.push(0usize);
    enumerate_tuples(&mut lags, 1, k - 1, d_cap, &mut |lags| {
        let k_par = (lags.len() & 1) as u64;
        let d_k = *lags.last().unwrap();
        if d_k >= n {
            return;
        }
        let reach = n - d_k; // leading index range 1..=reach
        for b in 1..=b_cap {
            for r in 1..=b.min(reach) {
                let len = (reach - r) / b + 1;
                if best > 0 && (len as i64) < best {
                    continue;
                }
                let mut s = 0i64;
                let (mut min_s, mut min_i) = (0i64, 0usize);
                let (mut max_s, mut max_i) = (0i64, 0usize);
                let mut j = 0usize;
                let mut pos = r;
                while pos <= reach {
                    let base = pos - 1;
                    let mut parity = 0u64;
                    for &d in lags.iter() {
                        parity ^= e.bit(base + d);
                    }
                    s += if parity == k_par { 1 } else { -1 };
                    j += 1;
                    for (v, w) in [
                        (s - min_s, (b, r + min_i * b, j - min_i - 1)),
                        (max_s - s, (b, r + max_i * b, j - max_i - 1)),
                    ] {
                        if v < best {
                            continue;
                        }
                        if v > best
                            || w < wit_abt
                            || (w == wit_abt
                                && lags.iter().copied().cmp(wit_lags.iter().copied())
                                    == core::cmp::Ordering::Less)
                        {
                            best = v;
                            wit_abt = w;
                            wit_lags.clear();
                            wit_lags.extend_from_slice(lags);
                        }
                    }
                    if s < min_s {
                        min_s = s;
                        min_i = j;
                    }
                    if s > max_s {
                        max_s = s;
                        max_i = j;
                    }
                    pos += b;
                }
            }
        }
    });

    Ok(MeasureResult {
        value: best as f64,
        witness: Witness::LaggedProgression {
            a: wit_abt.1,
            b: wit_abt.0,
            t: wit_abt.2,
            lags: wit_lags,
        },
        exact: b_cap >= n - 1 && (k == 1 || d_cap >= n - 1) || n == 1,
    })
}

// ---------------------------------------------------------------------------
// Normality measure
// ---------------------------------------------------------------------------

/// `N_k(E_N) = max_X max_M |count of X-windows among the first M - M/2^k|`,
/// window positions `n = 0..M-1`, `0 < M <= N+1-k`.
///
/// Deviations only peak right after a window hit, right before the next
/// hit, or at the final `M`, so one pass over the rolling window index plus
/// a final sweep over the 2^k patterns finds the maximum. Comparisons use
/// the integer `|count * 2^k - M|`, so the result is exact.
pub fn normality(e: &BinarySequence, k: usize) -> Result<MeasureResult> {
    let n = e.len();
    if k == 0 || k > 24 || k > n {
        return Err(Error::InvalidInput("normality order must satisfy 1 <= k <= min(N, 24)"));
    }
    let m_max = n + 1 - k;
    let scale = 1i64 << k;
    let mut counts = alloc::vec![0u32; 1usize << k];

    let mut best = i64::MIN;
    let mut wit = (usize::MAX, usize::MAX); // (pattern index, m)

    let consider = |v: i64, pat: usize, m: usize, best: &mut i64, wit: &mut (usize, usize)| {
        let w = (pat, m);
        if v > *best || (v == *best && w < *wit) {
            *best = v;
            *wit = w;
        }
    };

    let mask = (1usize << k) - 1;
    let mut window = 0usize;
    for j in 0..k - 1 {
        window |= (e.bit(j) as usize) << j;
    }
    for pos in 0..m_max {
        window = (window | ((e.bit(pos + k - 1) as usize) << (k - 1))) & mask;
        let c = counts[window] as i64;
        // Deviation just before this hit registers (M = pos) ...
        if pos >= 1 {
            consider((c * scale - pos as i64).abs(), window, pos, &mut best, &mut wit);
        }
        counts[window] = (c + 1) as u32;
        // ... and right after (M = pos + 1).
        consider(
            ((c + 1) * scale - (pos as i64 + 1)).abs(),
            window,
            pos + 1,
            &mut best,
            &mut wit,
        );
        window >>= 1;
    }
    for (pat, &c) in counts.iter().enumerate() {
        consider(
            (c as i64 * scale - m_max as i64).abs(),
            pat,
            m_max,
            &mut best,
            &mut wit,
        );
    }

    let pattern: Vec<i8> = (0..k).map(|j| if (wit.0 >> j) & 1 == 1 { 1 } else { -1 }).collect();
    Ok(MeasureResult {
        value: best as f64 / scale as f64,
        witness: Witness::Pattern { pattern, m: wit.1 },
        exact: true,
    })
}

// ---------------------------------------------------------------------------
// Witness re-evaluation
// ---------------------------------------------------------------------------

/// Recomputes the defining sum at a witness; the measure invariant is that
/// this reproduces `MeasureResult::value`.
pub fn evaluate_witness(e: &BinarySequence, witness: &Witness) -> Result<f64> {
    let n = e.len();
    match witness {
        Witness::Progression { a, b, t } => {
            if *a < 1 || *t < 1 || *b < 1 || a + (t - 1) * b > n {
                return Err(Error::InvalidInput("progression witness out of range"));
            }
            let mut s = 0i64;
            for j in 0..*t {
                s += e.get(a + j * b - 1) as i64;
            }
            Ok(s.unsigned_abs() as f64)
        }
        Witness::LaggedPrefix { lags, m } => {
            let d_k = *lags.last().ok_or(Error::InvalidInput("empty lag tuple"))?;
            if *m < 1 || d_k > n - m {
                return Err(Error::InvalidInput("lagged-prefix witness out of range"));
            }
            let mut s = 0i64;
            for i in 1..=*m {
                let mut prod = 1i64;
                for &d in lags {
                    prod *= e.get(i + d - 1) as i64;
                }
                s += prod;
            }
            Ok(s.unsigned_abs() as f64)
        }
        Witness::LaggedProgression { a, b, t, lags } => {
            let d_k = *lags.last().ok_or(Error::InvalidInput("empty lag tuple"))?;
            if *a < 1 || *b < 1 || a + t * b + d_k > n {
                return Err(Error::InvalidInput("lagged-progression witness out of range"));
            }
            let mut s = 0i64;
            for j in 0..=*t {
                let mut prod = 1i64;
                for &d in lags {
                    prod *= e.get(a + j * b + d - 1) as i64;
                }
                s += prod;
            }
            Ok(s.unsigned_abs() as f64)
        }
        Witness::Pattern { pattern, m } => {
            let k = pattern.len();
            if k == 0 || *m < 1 || *m > n + 1 - k {
                return Err(Error::InvalidInput("pattern witness out of range"));
            }
            let mut count = 0i64;
            for pos in 0..*m {
                if (0..k).all(|j| e.get(pos + j) == pattern[j]) {
                    count += 1;
                }
            }
            let scale = 1i64 << k;
            Ok((count * scale - *m as i64).abs() as f64 / scale as f64)
        }
    }
}

// ---------------------------------------------------------------------------
// Closed-form theorem bounds
// ---------------------------------------------------------------------------

/// Right-hand sides of the closed-form construction bounds (natural log).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum TheoreticalBound {
    /// `10 k sqrt(p) log p` for the Legendre construction's W.
    LegendreW { degree: u64, p: u64 },
    /// `10 k l sqrt(p) log p` for the Legendre construction's C_l.
    LegendreC { degree: u64, order: u64, p: u64 },
    /// `6 k sqrt(p) log T` for the curve construction's W.
    EcW { degree: u64, p: u64, group_order: u64 },
    /// `2 l k sqrt(p) log T` for the curve construction's C_l.
    EcC {
        degree: u64,
        order: u64,
        p: u64,
        group_order: u64,
    },
}

impl TheoreticalBound {
    pub fn evaluate(&self) -> Result<f64> {
        let check = |vals: &[u64]| {
            if vals.iter().any(|&v| v == 0) {
                Err(Error::InvalidInput("bound parameters must be positive"))
            } else {
                Ok(())
            }
        };
        Ok(match *self {
            Self::LegendreW { degree, p } => {
                check(&[degree, p])?;
                10.0 * degree as f64 * libm::sqrt(p as f64) * libm::log(p as f64)
            }
            Self::LegendreC { degree, order, p } => {
                check(&[degree, order, p])?;
                10.0 * degree as f64 * order as f64 * libm::sqrt(p as f64) * libm::log(p as f64)
            }
            Self::EcW { degree, p, group_order } => {
                check(&[degree, p, group_order])?;
                6.0 * degree as f64 * libm::sqrt(p as f64) * libm::log(group_order as f64)
            }
            Self::EcC {
                degree,
                order,
                p,
                group_order,
            } => {
                check(&[degree, order, p, group_order])?;
                2.0 * order as f64
                    * degree as f64
                    * libm::sqrt(p as f64)
                    * libm::log(group_order as f64)
            }
        })
    }
}

// ---------------------------------------------------------------------------
// Small-N exact kernel
// ---------------------------------------------------------------------------

/// `max_{1 <= k <= k_max} C_k(E_N)` computed exactly for `N <= 64` with a
/// single-word kernel (values only, no witnesses). Used by the
/// linear-complexity inequality check, where every order up to `L + 1`
/// is needed.
pub fn exact_correlation_maximum(e: &BinarySequence, k_max: usize) -> Result<u64> {
    let n = e.len();
    if n == 0 || n > 64 {
        return Err(Error::TooLarge("exact kernel needs N <= 64"));
    }
    let k_max = k_max.min(n);
    if k_max == 0 {
        return Err(Error::InvalidInput("order must be at least 1"));
    }
    let w = e.words()[0];
    let mut best = 0u64;
    // Depth-first over ascending lag tuples; `u` accumulates the XOR of the
    // shifted words, so bit m of `u` is the ones-parity of the k factors.
    // Every value reachable from a node is bounded by its window length
    // n - last_d, which prunes both the scan and the recursion.
    fn rec(w: u64, n: usize, u: u64, size: usize, last_d: usize, k_left: usize, best: &mut u64) {
        let u_len = n - last_d;
        if (u_len as u64) > *best {
            let k_par = (size & 1) as u64;
            let mut s = 0i64;
            let (mut min_s, mut max_s) = (0i64, 0i64);
            for m in 0..u_len {
                s += if (u >> m) & 1 == k_par { 1 } else { -1 };
                min_s = min_s.min(s);
                max_s = max_s.max(s);
            }
            *best = (*best).max((max_s - min_s) as u64);
        }
        if k_left > 0 && (*best as usize) + last_d + 1 < n {
            // Children at lag d reach at most n - d; only d with
            // n - d > best can still improve.
            let d_hi = n - 1 - *best as usize;
            for d in last_d + 1..=d_hi {
                rec(w, n, u ^ (w >> d), size + 1, d, k_left - 1, best);
            }
        }
    }
    rec(w, n, w, 1, 0, k_max - 1, &mut best);
    Ok(best)
}

// ---------------------------------------------------------------------------
// Shared helpers
// ---------------------------------------------------------------------------

#[inline]
fn effective_cap(cap: Option<u64>, n: usize) -> usize {
    let full = n.saturating_sub(1).max(1);
    match cap {
        Some(c) => (c as usize).min(full).max(1),
        None => full,
    }
}

fn check_budget(estimate: u128, bounds: &SearchBounds) -> Result<()> {
    if estimate > bounds.work_budget as u128 {
        return Err(Error::BudgetExceeded {
            estimate,
            budget: bounds.work_budget,
        });
    }
    Ok(())
}

pub(crate) fn binomial_saturating(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = match acc.checked_mul(n - i) {
            Some(v) => v / (i + 1),
            None => return u128::MAX,
        };
    }
    acc
}

/// Ascending lag tuples `lags[1..] in (next_min..=d_cap)`, `lags[0] = 0`.
fn enumerate_tuples(
    lags: &mut Vec<usize>,
    next_min: usize,
    remaining: usize,
    d_cap: usize,
    f: &mut impl FnMut(&[usize]),
) {
    if remaining == 0 {
        f(lags);
        return;
    }
    if d_cap + 1 < next_min + remaining {
        return;
    }
    for d in next_min..=(d_cap + 1 - remaining) {
        lags.push(d);
        enumerate_tuples(lags, d + 1, remaining - 1, d_cap, f);
        lags.pop();
    }
}

fn sample_lags(rng: &mut SplitMix64, k: usize, n: usize) -> Vec<usize> {
    // d_1 = 0 plus k-1 distinct draws from 1..=n-1.
    loop {
        let mut lags: Vec<usize> = (1..k).map(|_| 1 + (rng.next() % (n as u64 - 1)) as usize).collect();
        lags.push(0);
        lags.sort_unstable();
        lags.dedup();
        if lags.len() == k {
            return lags;
        }
    }
}

/// SplitMix64; tiny, stable across platforms and releases, which the
/// reproducibility contract for sampled searches needs.
pub(crate) struct SplitMix64(u64);

impl SplitMix64 {
    pub(crate) fn new(seed: u64) -> Self {
        Self(seed)
    }

    pub(crate) fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }
}
