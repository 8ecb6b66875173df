//! Machine checks of the proved inequalities connecting the measures to
//! the test statistics, on concrete sequences.
//!
//! Restricted searches under-estimate a measure, so which side of an
//! inequality carries the measure decides what a restricted result can
//! prove. Each side of a [`BoundCheck`] therefore records whether its
//! computed value is exact, a lower bound, or an upper bound of the true
//! quantity, and [`BoundCheck::conclusive`] derives what the outcome
//! establishes:
//!
//! * a pass is conclusive iff the computed lhs is not an under-estimate
//!   and the computed rhs is not an over-estimate;
//! * a violation is conclusive iff the computed lhs is not an
//!   over-estimate and the computed rhs is not an under-estimate.
//!
//! A conclusive violation would falsify a published theorem; it indicates
//! an implementation bug and must abort any suite loudly.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::measures::{
    binomial_saturating, combined_measure, correlation, exact_correlation_maximum, normality,
    well_distribution, SearchBounds, TheoreticalBound,
};
use crate::nist::{berlekamp_massey, block_frequency, longest_run_test, LongestRunConfig};
use crate::numtheory::{is_prime, is_primitive_root, PrimeModulus};
use crate::sequence::GeneratorSpec;
use crate::sequence::BinarySequence;
use crate::{Error, Result};

/// How a computed side relates to the true quantity.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exactness {
    Exact,
    LowerBound,
    UpperBound,
}

/// One checked inequality `lhs <= rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundCheck {
    pub name: String,
    pub lhs: f64,
    pub rhs: f64,
    pub holds: bool,
    pub lhs_exactness: Exactness,
    pub rhs_exactness: Exactness,
    pub context: String,
}

impl BoundCheck {
    fn new(
        name: &str,
        lhs: f64,
        rhs: f64,
        lhs_exactness: Exactness,
        rhs_exactness: Exactness,
        context: String,
    ) -> Self {
        Self {
            name: String::from(name),
            lhs,
            rhs,
            holds: lhs <= rhs,
            lhs_exactness,
            rhs_exactness,
            context,
        }
    }

    /// Whether the verdict settles the true inequality (see module docs).
    pub fn conclusive(&self) -> bool {
        use Exactness::*;
        if self.holds {
            !matches!(self.lhs_exactness, LowerBound) && !matches!(self.rhs_exactness, UpperBound)
        } else {
            !matches!(self.lhs_exactness, UpperBound) && !matches!(self.rhs_exactness, LowerBound)
        }
    }
}

/// Outcome of attempting a check.
#[derive(Debug, Clone, PartialEq)]
pub enum CheckOutcome {
    Checked(BoundCheck),
    NotApplicable { name: String, reason: String },
}

impl CheckOutcome {
    pub fn name(&self) -> &str {
        match self {
            CheckOutcome::Checked(c) => &c.name,
            CheckOutcome::NotApplicable { name, .. } => name,
        }
    }

    pub fn as_checked(&self) -> Option<&BoundCheck> {
        match self {
            CheckOutcome::Checked(c) => Some(c),
            CheckOutcome::NotApplicable { .. } => None,
        }
    }

    /// True when this outcome conclusively falsifies its inequality.
    pub fn is_conclusive_violation(&self) -> bool {
        self.as_checked().map_or(false, |c| !c.holds && c.conclusive())
    }
}

fn exactness_of(exact: bool) -> Exactness {
    if exact {
        Exactness::Exact
    } else {
        Exactness::LowerBound
    }
}

fn na(name: &str, reason: String) -> CheckOutcome {
    CheckOutcome::NotApplicable {
        name: String::from(name),
        reason,
    }
}

/// Converts a budget rejection into a not-applicable outcome; other errors
/// propagate.
fn budget_to_na<T>(r: Result<T>, name: &str) -> Result<core::result::Result<T, CheckOutcome>> {
    match r {
        Ok(v) => Ok(Ok(v)),
        Err(Error::BudgetExceeded { estimate, budget }) => Ok(Err(na(
            name,
            format!("exact search over budget ({estimate} > {budget} inner ops)"),
        ))),
        Err(e) => Err(e),
    }
}

// ---------------------------------------------------------------------------
// Block-frequency bound (Theorem 1)
// ---------------------------------------------------------------------------

/// Checks `X_1 <= 2*10^4 W(E_N)^2 / N` (requires the recommended sizing
/// `M >= 20`, `M > N/100`, `t < 100`) and the sharper proof-level bound
/// `X_1 <= (2t/M) W(E_N)^2`.
pub fn check_block_frequency_bound(
    e: &BinarySequence,
    m: usize,
    bounds: &SearchBounds,
) -> Result<Vec<CheckOutcome>> {
    const THEOREM: &str = "block_frequency.theorem1";
    const SHARP: &str = "block_frequency.sharp";
    let n = e.len();
    if m == 0 || n / m == 0 {
        return Err(Error::InvalidInput("block length must fit the sequence"));
    }
    let t = n / m;
    if !(m >= 20 && m > n / 100 && t < 100) {
        let reason = format!("block sizing M={m}, N={n}, t={t} violates M>=20, M>N/100, t<100");
        return Ok(alloc::vec![na(THEOREM, reason.clone()), na(SHARP, reason)]);
    }
    let x1 = block_frequency(e, m)?.statistic;
    let w = match budget_to_na(well_distribution(e, bounds), THEOREM)? {
        Ok(w) => w,
        Err(outcome) => {
            let reason = format!("W search over budget at N={n}");
            return Ok(alloc::vec![outcome, na(SHARP, reason)]);
        }
    };
    let w_exactness = exactness_of(w.exact);
    let context = format!("N={n} M={m} t={t} W={} (exact={})", w.value, w.exact);
    let theorem_rhs = 2e4 * w.value * w.value / n as f64;
    let sharp_rhs = 2.0 * t as f64 / m as f64 * w.value * w.value;
    Ok(alloc::vec![
        CheckOutcome::Checked(BoundCheck::new(
            THEOREM,
            x1,
            theorem_rhs,
            Exactness::Exact,
            w_exactness,
            context.clone(),
        )),
        CheckOutcome::Checked(BoundCheck::new(
            SHARP,
            x1,
            sharp_rhs,
            Exactness::Exact,
            w_exactness,
            context,
        )),
    ])
}

// ---------------------------------------------------------------------------
// Longest-run bound (Theorem 2)
// ---------------------------------------------------------------------------

/// Checks `X_2 <= (M/N) (sum_{r=1}^{M} binom(M,r) Q_r(E_N))^2` with exact
/// class probabilities and exact `Q_r`. Limited to `M <= 8`, `N <= 64`,
/// and `M | N` so every `Q_r` is exhaustively computable.
pub fn check_longest_run_bound(
    e: &BinarySequence,
    m: usize,
    classes: &[(usize, usize)],
) -> Result<CheckOutcome> {
    const NAME: &str = "longest_run.theorem2";
    let n = e.len();
    if m > 8 || n > 64 {
        return Ok(na(NAME, format!("needs M <= 8 and N <= 64, got M={m}, N={n}")));
    }
    if m == 0 || n % m != 0 {
        return Ok(na(NAME, format!("needs M | N, got M={m}, N={n}")));
    }
    let config = LongestRunConfig::new(m, classes)?;
    let x2 = longest_run_test(e, &config)?.statistic;
    let mut weighted = 0.0f64;
    for r in 1..=m {
        let q = match budget_to_na(combined_measure(e, r, &SearchBounds::exact()), NAME)? {
            Ok(q) => q,
            Err(outcome) => return Ok(outcome),
        };
        weighted += binomial_saturating(m as u128, r as u128) as f64 * q.value;
    }
    let rhs = m as f64 / n as f64 * weighted * weighted;
    Ok(CheckOutcome::Checked(BoundCheck::new(
        NAME,
        x2,
        rhs,
        Exactness::Exact,
        Exactness::Exact,
        format!("N={n} M={m} classes={classes:?}"),
    )))
}

// ---------------------------------------------------------------------------
// Linear-complexity inequality (Brandstaetter-Winterhof)
// ---------------------------------------------------------------------------

/// Checks `L(E_N) >= N - max_{1 <= k <= L+1} C_k(E_N)`, presented as
/// `N - max C_k <= L`. Exact correlations require `N <= 24`.
pub fn check_bw_inequality(e: &BinarySequence) -> Result<CheckOutcome> {
    const NAME: &str = "linear_complexity.bw";
    let n = e.len();
    if n > 24 {
        return Ok(na(NAME, format!("needs N <= 24 for exact correlations, got N={n}")));
    }
    let l = berlekamp_massey(e.words(), n).complexity;
    let k_max = (l + 1).min(n);
    let max_c = exact_correlation_maximum(e, k_max)?;
    Ok(CheckOutcome::Checked(BoundCheck::new(
        NAME,
        n as f64 - max_c as f64,
        l as f64,
        Exactness::Exact,
        Exactness::Exact,
        format!("N={n} L={l} maxC={max_c} (k <= {k_max})"),
    )))
}

// ---------------------------------------------------------------------------
// Normality chain (Eq. 5)
// ---------------------------------------------------------------------------

/// Checks both halves of
/// `N_k <= 2^-k sum_t binom(k,t) C_t <= max_t C_t`, exactly.
/// Limited to `N <= 40`, `k <= 4`.
pub fn check_nk_chain(e: &BinarySequence, k: usize) -> Result<Vec<CheckOutcome>> {
    const BINOMIAL: &str = "normality.chain_binomial";
    const MAX: &str = "normality.chain_max";
    let n = e.len();
    if n > 40 || k > 4 {
        let reason = format!("needs N <= 40 and k <= 4, got N={n}, k={k}");
        return Ok(alloc::vec![na(BINOMIAL, reason.clone()), na(MAX, reason)]);
    }
    let nk = normality(e, k)?.value;
    let mut cs = Vec::with_capacity(k);
    for t in 1..=k {
        cs.push(correlation(e, t, &SearchBounds::exact())?.value);
    }
    let mid = cs
        .iter()
        .enumerate()
        .map(|(i, &c)| binomial_saturating(k as u128, i as u128 + 1) as f64 * c)
        .sum::<f64>()
        / (1u64 << k) as f64;
    let c_max = cs.iter().copied().fold(0.0f64, f64::max);
    let context = format!("N={n} k={k} C={cs:?}");
    Ok(alloc::vec![
        CheckOutcome::Checked(BoundCheck::new(
            BINOMIAL,
            nk,
            mid,
            Exactness::Exact,
            Exactness::Exact,
            context.clone(),
        )),
        CheckOutcome::Checked(BoundCheck::new(
            MAX,
            mid,
            c_max,
            Exactness::Exact,
            Exactness::Exact,
            context,
        )),
    ])
}

// ---------------------------------------------------------------------------
// Legendre combined-vs-correlation relation
// ---------------------------------------------------------------------------

/// Checks `Q_k(E_p) <= C_k(E_p) + 2k` for a Legendre-constructed sequence.
/// `bounds_q` and `bounds_c` control the two searches independently (the
/// canonical conclusive-violation setup is a restricted `Q` against an
/// exact `C`).
pub fn check_legendre_qc(
    spec: &GeneratorSpec,
    k: usize,
    bounds_q: &SearchBounds,
    bounds_c: &SearchBounds,
) -> Result<CheckOutcome> {
    const NAME: &str = "legendre.qc";
    let GeneratorSpec::Legendre { p, f } = spec else {
        return Ok(na(NAME, String::from("not a Legendre-constructed sequence")));
    };
    if p.get() > 2003 || k > 3 {
        return Ok(na(
            NAME,
            format!("needs p <= 2003 and k <= 3, got p={}, k={k}", p.get()),
        ));
    }
    if !f.is_squarefree(*p) {
        return Ok(na(NAME, String::from("f has a repeated root; theorem hypotheses unmet")));
    }
    let e = spec.generate()?;
    let q = match budget_to_na(combined_measure(&e, k, bounds_q), NAME)? {
        Ok(q) => q,
        Err(outcome) => return Ok(outcome),
    };
    let c = match budget_to_na(correlation(&e, k, bounds_c), NAME)? {
        Ok(c) => c,
        Err(outcome) => return Ok(outcome),
    };
    Ok(CheckOutcome::Checked(BoundCheck::new(
        NAME,
        q.value,
        c.value + 2.0 * k as f64,
        exactness_of(q.exact),
        exactness_of(c.exact),
        format!(
            "p={} deg_f={} k={k} Q={} (exact={}) C={} (exact={})",
            p.get(),
            f.degree(),
            q.value,
            q.exact,
            c.value,
            c.exact
        ),
    )))
}

// ---------------------------------------------------------------------------
// Construction bounds (Theorems A and E)
// ---------------------------------------------------------------------------

/// Compares measured `W` and `C_l` (restricted searches give certified
/// lower bounds) against the closed-form construction bounds. Theorem B/C
/// specs carry implicit constants, so the inverse construction reports
/// no-numeric-bound.
pub fn check_construction_bounds(
    spec: &GeneratorSpec,
    e: &BinarySequence,
    l: usize,
    bounds: &SearchBounds,
) -> Result<Vec<CheckOutcome>> {
    const W_NAME: &str = "construction.w";
    const C_NAME: &str = "construction.c";
    match spec {
        GeneratorSpec::Legendre { p, f } => {
            let k = f.degree() as u64;
            if k == 0 {
                return Err(Error::InvalidInput("construction bound needs deg f >= 1"));
            }
            if !f.is_squarefree(*p) {
                let reason = String::from("f has a repeated root; theorem hypotheses unmet");
                return Ok(alloc::vec![na(W_NAME, reason.clone()), na(C_NAME, reason)]);
            }
            let ctx = format!("legendre p={} deg_f={k}", p.get());
            let w_bound = TheoreticalBound::LegendreW { degree: k, p: p.get() }.evaluate()?;
            let c_bound =
                TheoreticalBound::LegendreC { degree: k, order: l as u64, p: p.get() }.evaluate()?;
            construction_pair(e, l, bounds, *p, k, w_bound, c_bound, ctx)
        }
        GeneratorSpec::EllipticCurve { curve, order, f, .. } => {
            let k = f.degree() as u64;
            if k == 0 {
                return Err(Error::InvalidInput("construction bound needs deg f >= 1"));
            }
            if !is_prime(*order) {
                let reason = format!("group order {order} is not prime; Theorem E hypotheses unmet");
                return Ok(alloc::vec![na(W_NAME, reason.clone()), na(C_NAME, reason)]);
            }
            // "f not a perfect square" is asserted by the caller; it is not
            // decided algorithmically here.
            let p = curve.p().get();
            let ctx = format!("ec p={p} T={order} deg_f={k} (square-freeness of f asserted)");
            let w_bound = TheoreticalBound::EcW { degree: k, p, group_order: *order }.evaluate()?;
            let c_bound = TheoreticalBound::EcC {
                degree: k,
                order: l as u64,
                p,
                group_order: *order,
            }
            .evaluate()?;
            let t_mod = PrimeModulus::new(*order)?;
            construction_pair_with_cond(
                e,
                l,
                bounds,
                move |ll, kk| correlation_condition(ll, kk, t_mod),
                k,
                w_bound,
                c_bound,
                ctx,
            )
        }
        GeneratorSpec::Inverse { .. } => {
            let reason =
                String::from("no numeric bound: the inverse-construction constants are implicit");
            Ok(alloc::vec![na(W_NAME, reason.clone()), na(C_NAME, reason)])
        }
        _ => {
            let reason = String::from("no construction bound for this generator");
            Ok(alloc::vec![na(W_NAME, reason.clone()), na(C_NAME, reason)])
        }
    }
}

/// Theorem A conditions (i)-(iii) on the correlation order.
fn correlation_condition(l: usize, k: u64, p: PrimeModulus) -> Result<bool> {
    if l == 2 {
        return Ok(true);
    }
    if (l as u64) < p.get() && is_primitive_root(2, p)? {
        return Ok(true);
    }
    let four_k = 4u128 * k as u128;
    let mut pow = 1u128;
    for _ in 0..l {
        pow = match pow.checked_mul(four_k) {
            Some(v) => v,
            None => return Ok(false),
        };
        if pow >= p.get() as u128 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[allow(clippy::too_many_arguments)]
fn construction_pair(
    e: &BinarySequence,
    l: usize,
    bounds: &SearchBounds,
    p: PrimeModulus,
    k: u64,
    w_bound: f64,
    c_bound: f64,
    ctx: String,
) -> Result<Vec<CheckOutcome>> {
    construction_pair_with_cond(
        e,
        l,
        bounds,
        move |ll, kk| correlation_condition(ll, kk, p),
        k,
        w_bound,
        c_bound,
        ctx,
    )
}

#[allow(clippy::too_many_arguments)]
fn construction_pair_with_cond(
    e: &BinarySequence,
    l: usize,
    bounds: &SearchBounds,
    cond: impl Fn(usize, u64) -> Result<bool>,
    k: u64,
    w_bound: f64,
    c_bound: f64,
    ctx: String,
) -> Result<Vec<CheckOutcome>> {
    const W_NAME: &str = "construction.w";
    const C_NAME: &str = "construction.c";
    let mut out = Vec::with_capacity(2);
    match budget_to_na(well_distribution(e, bounds), W_NAME)? {
        Ok(w) => out.push(CheckOutcome::Checked(BoundCheck::new(
            W_NAME,
            w.value,
            w_bound,
            exactness_of(w.exact),
            Exactness::Exact,
            format!("{ctx} W={} (exact={})", w.value, w.exact),
        ))),
        Err(outcome) => out.push(outcome),
    }
    if l == 0 {
        out.push(na(C_NAME, String::from("correlation order l = 0 requested")));
        return Ok(out);
    }
    if !cond(l, k)? {
        out.push(na(
            C_NAME,
            format!("none of conditions (i)-(iii) holds for l={l}, k={k}"),
        ));
        return Ok(out);
    }
    match budget_to_na(correlation(e, l, bounds), C_NAME)? {
        Ok(c) => out.push(CheckOutcome::Checked(BoundCheck::new(
            C_NAME,
            c.value,
            c_bound,
            exactness_of(c.exact),
            Exactness::Exact,
            format!("{ctx} l={l} C={} (exact={})", c.value, c.exact),
        ))),
        Err(outcome) => out.push(outcome),
    }
    Ok(out)
}
