//! Subcommand definitions and dispatch.

pub mod generate;
pub mod measure;
pub mod verify;

use clap::{Parser, Subcommand};

use crate::CliResult;

#[derive(Parser)]
#[command(
    name = "prseq",
    version,
    about = "Generate pseudorandom binary sequences, compute pseudorandomness measures, \
             run statistical tests, and machine-check the inequalities connecting them"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand)]
pub enum Command {
    /// Generate sequence families into a directory (plus a manifest).
    Generate(generate::GenerateArgs),
    /// Compute W, C_k, Q_k, N_k on a sequence file.
    Measure(measure::MeasureArgs),
    /// Run the statistical test suite over sequence files and aggregate.
    Test(test::TestArgs),
    /// Run named bound-check suites; exits nonzero on conclusive violation.
    Verify(verify::VerifyArgs),
}

pub fn run(cli: Cli) -> CliResult<u8> {
    match cli.command {
        Command::Generate(args) => generate::run(args),
        Command::Measure(args) => measure::run(args),
        Command::Test(args) => test::run(args),
        Command::Verify(args) => verify::run(args),
    }
}

/// Builds the global rayon pool when a thread count is requested. Parallel
/// reductions in this crate all collect in input order, so results are
/// byte-identical across thread counts.
pub(crate) fn init_threads(threads: Option<usize>) -> CliResult<()> {
    if let Some(n) = threads {
        if n == 0 {
            return Err(crate::CliError::usage("--threads must be at least 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .map_err(|e| crate::CliError::usage(format!("cannot size thread pool: {e}")))?;
    }
    Ok(())
}

/// SplitMix64 stream for the deterministic random corpora used by
/// `verify`; stable across platforms and releases.
pub(crate) struct DetRng(u64);

impl DetRng {
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

    pub(crate) fn sequence(&mut self, n: usize) -> prseq_core::sequence::BinarySequence {
        prseq_core::sequence::BinarySequence::from_bit_fn(n, |_| self.next() & 1 == 1)
            .expect("n >= 1")
    }
}
