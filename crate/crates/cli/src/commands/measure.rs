//! `prseq measure`: witnessed measure values for one sequence file.

use std::path::PathBuf;

use clap::Args;
use prseq_core::measures::{
    combined_measure, correlation, normality, well_distribution, MeasureResult, SearchBounds,
    Witness,
};
use prseq_core::sequence::BinarySequence;

use crate::io::{read_sequence, FileFormat};
use crate::{CliError, CliResult, EXIT_OK};

#[derive(Args)]
pub struct MeasureArgs {
    /// Sequence file to measure.
    pub file: PathBuf,

    /// Measures to compute: w, c<k>, q<k>, n<k> (e.g. --measures w,c2,q4).
    #[arg(long, value_delimiter = ',', required = true)]
    pub measures: Vec<String>,

    #[arg(long, value_enum, default_value = "ascii")]
    pub format: FileFormat,

    /// Cap on the progression step b (default: auto policy).
    #[arg(long)]
    pub b_max: Option<u64>,

    /// Cap on the largest lag d_k (default: auto policy).
    #[arg(long)]
    pub d_max: Option<u64>,

    /// Random lag tuples beyond the exhaustive window.
    #[arg(long, default_value_t = 0)]
    pub samples: u64,

    /// Seed for sampled tuples.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,

    /// Force a fully exhaustive search (budget-gated).
    #[arg(long, conflicts_with_all = ["b_max", "d_max"])]
    pub exact: bool,
}

enum MeasureKind {
    W,
    C(usize),
    Q(usize),
    N(usize),
}

fn parse_measure(token: &str) -> CliResult<MeasureKind> {
    let t = token.trim().to_ascii_lowercase();
    let bad = || CliError::usage(format!("unknown measure {token:?} (expected w, c<k>, q<k>, n<k>)"));
    if t == "w" {
        return Ok(MeasureKind::W);
    }
    let (head, tail) = t.split_at(1);
    let k: usize = tail.parse().map_err(|_| bad())?;
    if k == 0 {
        return Err(bad());
    }
    match head {
        "c" => Ok(MeasureKind::C(k)),
        "q" => Ok(MeasureKind::Q(k)),
        "n" => Ok(MeasureKind::N(k)),
        _ => Err(bad()),
    }
}

fn bounds_for(args: &MeasureArgs, n: usize, k: usize) -> SearchBounds {
    if args.exact {
        let mut b = SearchBounds::exact();
        b.sample_count = args.samples;
        b.seed = args.seed;
        return b;
    }
    let mut b = SearchBounds::auto(n, k);
    if args.b_max.is_some() {
        b.b_max = args.b_max;
    }
    if args.d_max.is_some() {
        b.d_max = args.d_max;
    }
    b.sample_count = args.samples;
    b.seed = args.seed;
    b
}

fn witness_text(w: &Witness) -> String {
    let lags_text = |lags: &[usize]| {
        lags.iter()
            .map(|d| d.to_string())
            .collect::<Vec<_>>()
            .join(",")
    };
    match w {
        Witness::Progression { a, b, t } => format!("a={a} b={b} t={t}"),
        Witness::LaggedPrefix { lags, m } => format!("m={m} lags={}", lags_text(lags)),
        Witness::LaggedProgression { a, b, t, lags } => {
            format!("a={a} b={b} t={t} lags={}", lags_text(lags))
        }
        Witness::Pattern { pattern, m } => {
            let pat: String = pattern.iter().map(|&s| if s == 1 { '+' } else { '-' }).collect();
            format!("pattern={pat} m={m}")
        }
    }
}

fn run_one(e: &BinarySequence, kind: &MeasureKind, args: &MeasureArgs) -> CliResult<(String, MeasureResult)> {
    let n = e.len();
    let to_cli = |err: prseq_core::Error| CliError::usage(format!("measure failed: {err}"));
    Ok(match kind {
        MeasureKind::W => (
            "W".into(),
            well_distribution(e, &bounds_for(args, n, 1)).map_err(to_cli)?,
        ),
        MeasureKind::C(k) => (
            format!("C{k}"),
            correlation(e, *k, &bounds_for(args, n, *k)).map_err(to_cli)?,
        ),
        MeasureKind::Q(k) => (
            format!("Q{k}"),
            combined_measure(e, *k, &bounds_for(args, n, *k)).map_err(to_cli)?,
        ),
        MeasureKind::N(k) => (format!("N{k}"), normality(e, *k).map_err(to_cli)?),
    })
}

pub fn run(args: MeasureArgs) -> CliResult<u8> {
    let kinds: Vec<MeasureKind> = args
        .measures
        .iter()
        .map(|t| parse_measure(t))
        .collect::<CliResult<_>>()?;
    let e = read_sequence(&args.file, args.format)?;
    for kind in &kinds {
        let (name, result) = run_one(&e, kind, &args)?;
        println!(
            "file={} measure={name} value={} exact={} {}",
            args.file.display(),
            result.value,
            result.exact,
            witness_text(&result.witness),
        );
    }
    Ok(EXIT_OK)
}
