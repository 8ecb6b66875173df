//! `prseq verify`: named desk-scale suites of the bound checks. Exit is
//! nonzero iff some check conclusively violates its inequality, which
//! would falsify a published theorem and therefore means an
//! implementation bug.

use clap::Args;
use prseq_core::measures::SearchBounds;
use prseq_core::numtheory::{PolyOverFp, PrimeModulus};
use prseq_core::sequence::GeneratorSpec;
use prseq_core::verify::{
    check_block_frequency_bound, check_bw_inequality, check_construction_bounds,
    check_legendre_qc, check_longest_run_bound, check_nk_chain, CheckOutcome,
};
use prseq_core::Result as CoreResult;
use rayon::prelude::*;

use crate::families;
use crate::{CliError, CliResult, EXIT_FAILURE_OF_INTEREST, EXIT_OK};

#[derive(Args)]
pub struct VerifyArgs {
    /// Suite name: block-freq, longest-run, bw, nk-chain, legendre-qc,
    /// construction, or "all".
    pub check: String,

    /// Seed for the random sequence corpora.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Worker threads (default: all cores).
    #[arg(long)]
    pub threads: Option<usize>,

    /// Print every check row instead of per-name summaries.
    #[arg(long)]
    pub verbose: bool,
}

pub const SUITE_NAMES: [&str; 6] = [
    "block-freq",
    "longest-run",
    "bw",
    "nk-chain",
    "legendre-qc",
    "construction",
];

fn core_err(e: prseq_core::Error) -> CliError {
    CliError::Failure(format!("check failed: {e}"))
}

fn suite_block_freq(seed: u64) -> CoreResult<Vec<CheckOutcome>> {
    let p = PrimeModulus::new(2003).expect("prime");
    let mut inputs = Vec::new();
    for i in 1..=20i64 {
        let spec = GeneratorSpec::Legendre {
            p,
            f: PolyOverFp::new(&[i, 0, 0, 1], p),
        };
        inputs.push((format!("legendre p=2003 f=x^3+{i}"), spec.generate()?));
    }
    let mut rng = super::DetRng::new(seed);
    for i in 0..500 {
        inputs.push((format!("random seed={seed} index={i}"), rng.sequence(2000)));
    }
    let outcomes: CoreResult<Vec<Vec<CheckOutcome>>> = inputs
        .par_iter()
        .map(|(label, e)| {
            let mut out = check_block_frequency_bound(e, 25, &SearchBounds::exact())?;
            for o in &mut out {
                relabel(o, label);
            }
            Ok(out)
        })
        .collect();
    Ok(outcomes?.into_iter().flatten().collect())
}

fn suite_longest_run() -> CoreResult<Vec<CheckOutcome>> {
    let classes = [(0usize, 2usize), (3, 5)];
    (0u32..(1 << 10))
        .into_par_iter()
        .map(|v| {
            let e = prseq_core::sequence::BinarySequence::from_bit_fn(10, |i| (v >> i) & 1 == 1)
                .expect("n = 10");
            let mut o = check_longest_run_bound(&e, 5, &classes)?;
            relabel(&mut o, &format!("exhaustive N=10 M=5 word={v}"));
            Ok(o)
        })
        .collect()
}

fn suite_bw(seed: u64) -> CoreResult<Vec<CheckOutcome>> {
    let mut inputs = Vec::new();
    let mut rng = super::DetRng::new(seed);
    for i in 0..1000 {
        inputs.push((format!("random N=20 seed={seed} index={i}"), rng.sequence(20)));
    }
    for v in 0u32..(1 << 12) {
        let e = prseq_core::sequence::BinarySequence::from_bit_fn(12, |i| (v >> i) & 1 == 1)
            .expect("n = 12");
        inputs.push((format!("exhaustive N=12 word={v}"), e));
    }
    inputs
        .par_iter()
        .map(|(label, e)| {
            let mut o = check_bw_inequality(e)?;
            relabel(&mut o, label);
            Ok(o)
        })
        .collect()
}

fn suite_nk_chain() -> CoreResult<Vec<CheckOutcome>> {
    let outcomes: CoreResult<Vec<Vec<CheckOutcome>>> = (0u32..(1 << 10))
        .into_par_iter()
        .map(|v| {
            let e = prseq_core::sequence::BinarySequence::from_bit_fn(10, |i| (v >> i) & 1 == 1)
                .expect("n = 10");
            let mut out = Vec::new();
            for k in 1..=3usize {
                let mut o = check_nk_chain(&e, k)?;
                for oo in &mut o {
                    relabel(oo, &format!("exhaustive N=10 k={k} word={v}"));
                }
                out.extend(o);
            }
            Ok(out)
        })
        .collect();
    Ok(outcomes?.into_iter().flatten().collect())
}

fn suite_legendre_qc() -> CoreResult<Vec<CheckOutcome>> {
    let p103 = PrimeModulus::new(103).expect("prime");
    let p503 = PrimeModulus::new(503).expect("prime");
    let exact = SearchBounds::exact();
    let mut out = Vec::new();
    let cases: [(PrimeModulus, PolyOverFp, usize, SearchBounds); 4] = [
        (p103, PolyOverFp::new(&[1, 1], p103), 2, exact),
        (p103, PolyOverFp::new(&[2, 0, 0, 1], p103), 2, exact),
        (p103, PolyOverFp::new(&[2, 0, 0, 1], p103), 3, exact),
        (p503, PolyOverFp::new(&[1, 1], p503), 2, SearchBounds::restricted(32, 64)),
    ];
    for (p, f, k, bounds_q) in cases {
        let label = format!("legendre p={} deg_f={} k={k}", p.get(), f.degree());
        let spec = GeneratorSpec::Legendre { p, f };
        let mut o = check_legendre_qc(&spec, k, &bounds_q, &SearchBounds::exact())?;
        relabel(&mut o, &label);
        out.push(o);
    }
    Ok(out)
}

fn suite_construction() -> CliResult<Vec<CheckOutcome>> {
    let mut out = Vec::new();

    let p2003 = PrimeModulus::new(2003).expect("prime");
    let spec = GeneratorSpec::Legendre {
        p: p2003,
        f: PolyOverFp::new(&[1, 0, 0, 1], p2003),
    };
    let e = spec.generate().map_err(core_err)?;
    out.extend(check_construction_bounds(&spec, &e, 2, &SearchBounds::exact()).map_err(core_err)?);

    let p = PrimeModulus::new(100_003).expect("prime");
    let spec = GeneratorSpec::Legendre {
        p,
        f: {
            let mut c = [0i64; 32];
            c[0] = 1;
            c[31] = 1;
            PolyOverFp::new(&c, p)
        },
    };
    let e = spec.generate().map_err(core_err)?;
    out.extend(
        check_construction_bounds(&spec, &e, 2, &SearchBounds::restricted(64, 32))
            .map_err(core_err)?,
    );

    let fam = families::ec_family(100_003, -3, 74_439, 85_611, 76_395, 2)?;
    let spec = fam.specs[1].clone(); // f = x^31 + x + y + 1
    let e = spec.generate().map_err(core_err)?;
    out.extend(
        check_construction_bounds(&spec, &e, 2, &SearchBounds::restricted(64, 32))
            .map_err(core_err)?,
    );
    Ok(out)
}

fn relabel(outcome: &mut CheckOutcome, label: &str) {
    match outcome {
        CheckOutcome::Checked(c) => c.context = format!("{label}; {}", c.context),
        CheckOutcome::NotApplicable { reason, .. } => *reason = format!("{label}; {reason}"),
    }
}

fn run_suite_by_name(name: &str, seed: u64) -> CliResult<Vec<CheckOutcome>> {
    match name {
        "block-freq" => suite_block_freq(seed).map_err(core_err),
        "longest-run" => suite_longest_run().map_err(core_err),
        "bw" => suite_bw(seed).map_err(core_err),
        "nk-chain" => suite_nk_chain().map_err(core_err),
        "legendre-qc" => suite_legendre_qc().map_err(core_err),
        "construction" => suite_construction(),
        _ => Err(CliError::usage(format!(
            "unknown check {name:?} (expected one of {SUITE_NAMES:?} or \"all\")"
        ))),
    }
}

pub fn run(args: VerifyArgs) -> CliResult<u8> {
    super::init_threads(args.threads)?;
    let names: Vec<&str> = if args.check == "all" {
        SUITE_NAMES.to_vec()
    } else {
        vec![args.check.as_str()]
    };

    let mut any_violation = false;
    for name in names {
        let mut outcomes = run_suite_by_name(name, args.seed)?;
        outcomes.sort_by(|x, y| {
            (x.name(), sort_context(x)).cmp(&(y.name(), sort_context(y)))
        });
        summarize(name, &outcomes, args.verbose);
        for o in &outcomes {
            if o.is_conclusive_violation() {
                any_violation = true;
                let c = o.as_checked().expect("violations are checked outcomes");
                eprintln!("================================================================");
                eprintln!("CONCLUSIVE VIOLATION of {}: lhs={} rhs={}", c.name, c.lhs, c.rhs);
                eprintln!("context: {}", c.context);
                eprintln!("this falsifies a proved inequality: implementation bug");
                eprintln!("================================================================");
            }
        }
    }
    Ok(if any_violation {
        EXIT_FAILURE_OF_INTEREST
    } else {
        EXIT_OK
    })
}

fn sort_context(o: &CheckOutcome) -> String {
    match o {
        CheckOutcome::Checked(c) => c.context.clone(),
        CheckOutcome::NotApplicable { reason, .. } => reason.clone(),
    }
}

fn summarize(suite: &str, outcomes: &[CheckOutcome], verbose: bool) {
    if verbose {
        for o in outcomes {
            match o {
                CheckOutcome::Checked(c) => println!(
                    "{suite} {} lhs={:.4} rhs={:.4} holds={} conclusive={} [{}]",
                    c.name,
                    c.lhs,
                    c.rhs,
                    c.holds,
                    c.conclusive(),
                    c.context
                ),
                CheckOutcome::NotApplicable { name, reason } => {
                    println!("{suite} {name} not-applicable [{reason}]")
                }
            }
        }
    }
    // Per-name summary rows in sorted order.
    let mut names: Vec<&str> = outcomes.iter().map(|o| o.name()).collect();
    names.sort_unstable();
    names.dedup();
    for check_name in names {
        let rows: Vec<&CheckOutcome> = outcomes.iter().filter(|o| o.name() == check_name).collect();
        let checked = rows.iter().filter_map(|o| o.as_checked()).count();
        let na = rows.len() - checked;
        let holds = rows
            .iter()
            .filter_map(|o| o.as_checked())
            .filter(|c| c.holds)
            .count();
        let conclusive = rows
            .iter()
            .filter_map(|o| o.as_checked())
            .filter(|c| c.conclusive())
            .count();
        let violations = checked - holds;
        let min_margin = rows
            .iter()
            .filter_map(|o| o.as_checked())
            .map(|c| c.rhs - c.lhs)
            .fold(f64::INFINITY, f64::min);
        println!(
            "{suite} {check_name}: checked={checked} holds={holds} violations={violations} \
             conclusive={conclusive} not_applicable={na} min_margin={}",
            if min_margin.is_finite() {
                format!("{min_margin:.4}")
            } else {
                "n/a".to_string()
            }
        );
    }
}
