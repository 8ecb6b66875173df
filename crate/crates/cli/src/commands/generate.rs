//! `prseq generate`: family parameters -> manifest -> sequence files.
//!
//! Generation always goes through the manifest, so re-running from a saved
//! manifest reproduces every output byte.

use std::path::{Path, PathBuf};

use clap::Args;
use prseq_core::sequence::{decode_ascii, GeneratorSpec};

use crate::families;
use crate::io::{write_sequence, write_text, FileFormat};
use crate::manifest::Manifest;
use crate::polyparse::parse_poly;
use crate::{CliError, CliResult, EXIT_OK};

#[derive(Args)]
pub struct GenerateArgs {
    /// Family: legendre, inverse, ec, rudin-shapiro, thue-morse, periodic.
    #[arg(long, conflicts_with = "from_manifest")]
    pub family: Option<String>,

    /// Re-run a previous generation from its manifest.
    #[arg(long)]
    pub from_manifest: Option<PathBuf>,

    /// Output directory (created if missing).
    #[arg(long)]
    pub out: PathBuf,

    #[arg(long, value_enum, default_value = "ascii")]
    pub format: FileFormat,

    /// Prime modulus (legendre: default 100003; inverse: default 200003;
    /// ec: default 100003).
    #[arg(long)]
    pub p: Option<u64>,

    /// Number of sequences in the family (default 20).
    #[arg(long)]
    pub count: Option<usize>,

    /// Legendre family degree: f_i = x^degree + i (default 31).
    #[arg(long)]
    pub degree: Option<usize>,

    /// Explicit polynomial (single sequence), e.g. "x^31+1".
    #[arg(long)]
    pub poly: Option<String>,

    /// Inverse construction: keep only the first half of the sequence.
    #[arg(long)]
    pub half: bool,

    /// Curve coefficient A (default -3).
    #[arg(long, allow_hyphen_values = true)]
    pub a: Option<i64>,

    /// Curve coefficient B (default 74439).
    #[arg(long, allow_hyphen_values = true)]
    pub b: Option<i64>,

    /// Generator point x (default 85611).
    #[arg(long)]
    pub gx: Option<u64>,

    /// Generator point y (default 76395).
    #[arg(long)]
    pub gy: Option<u64>,

    /// Length for rudin-shapiro / thue-morse.
    #[arg(long)]
    pub n: Option<usize>,

    /// Periodic pattern as ASCII bits, e.g. "1001".
    #[arg(long)]
    pub pattern: Option<String>,

    /// Periodic repetition count.
    #[arg(long)]
    pub reps: Option<usize>,
}

pub fn run(args: GenerateArgs) -> CliResult<u8> {
    let manifest = match (&args.family, &args.from_manifest) {
        (Some(_), None) => manifest_from_args(&args)?,
        (None, Some(path)) => {
            let mut m = Manifest::load(path)?;
            if m.get("format").is_none() {
                m.push("format", args.format.name());
            }
            m
        }
        _ => {
            return Err(CliError::usage(
                "exactly one of --family and --from-manifest is required",
            ))
        }
    };
    generate_from_manifest(&manifest, &args.out)?;
    Ok(EXIT_OK)
}

fn manifest_from_args(args: &GenerateArgs) -> CliResult<Manifest> {
    let family = args.family.as_deref().expect("checked by caller");
    let mut m = Manifest::new();
    m.push("tool", format!("prseq {}", env!("CARGO_PKG_VERSION")));
    m.push("family", family);
    m.push("format", args.format.name());
    let count = args.count.unwrap_or(20);
    match family {
        "legendre" => {
            m.push("p", args.p.unwrap_or(100_003));
            if let Some(poly) = &args.poly {
                if args.count.is_some_and(|c| c != 1) {
                    return Err(CliError::usage("--poly generates a single sequence; use --count 1"));
                }
                m.push("count", 1u32);
                m.push("poly", poly);
            } else {
                m.push("count", count);
                m.push("degree", args.degree.unwrap_or(31));
            }
        }
        "inverse" => {
            m.push("p", args.p.unwrap_or(200_003));
            if let Some(poly) = &args.poly {
                if args.count.is_some_and(|c| c != 1) {
                    return Err(CliError::usage("--poly generates a single sequence; use --count 1"));
                }
                m.push("count", 1u32);
                m.push("poly", poly);
            } else {
                m.push("count", count);
            }
            m.push("half", args.half);
        }
        "ec" => {
            let p = args.p.unwrap_or(100_003) as i64;
            m.push("p", p);
            m.push("a", args.a.unwrap_or(-3).rem_euclid(p));
            m.push("b", args.b.unwrap_or(74_439).rem_euclid(p));
            m.push("gx", args.gx.unwrap_or(85_611));
            m.push("gy", args.gy.unwrap_or(76_395));
            m.push("count", count);
        }
        "rudin-shapiro" | "thue-morse" => {
            let n = args
                .n
                .ok_or_else(|| CliError::usage(format!("--n is required for {family}")))?;
            m.push("n", n);
            m.push("count", 1u32);
        }
        "periodic" => {
            let pattern = args
                .pattern
                .as_deref()
                .ok_or_else(|| CliError::usage("--pattern is required for periodic"))?;
            let reps = args
                .reps
                .ok_or_else(|| CliError::usage("--reps is required for periodic"))?;
            m.push("pattern", pattern);
            m.push("reps", reps);
            m.push("count", 1u32);
        }
        other => {
            return Err(CliError::usage(format!(
                "unknown family {other:?} (expected legendre, inverse, ec, rudin-shapiro, thue-morse, periodic)"
            )))
        }
    }
    Ok(m)
}

fn specs_from_manifest(m: &Manifest) -> CliResult<Vec<GeneratorSpec>> {
    let family = m.require("family")?;
    let parse_u64 = |key: &str| -> CliResult<u64> {
        m.require(key)?
            .parse()
            .map_err(|_| CliError::usage(format!("manifest key {key} is not an integer")))
    };
    let parse_usize = |key: &str| -> CliResult<usize> {
        m.require(key)?
            .parse()
            .map_err(|_| CliError::usage(format!("manifest key {key} is not an integer")))
    };
    match family {
        "legendre" => {
            let p = parse_u64("p")?;
            if let Some(poly) = m.get("poly") {
                let pm = families::prime(p)?;
                Ok(vec![GeneratorSpec::Legendre {
                    p: pm,
                    f: parse_poly(poly, pm)?,
                }])
            } else {
                families::legendre_family(p, parse_usize("degree")?, parse_usize("count")?)
            }
        }
        "inverse" => {
            let p = parse_u64("p")?;
            let half = m.get("half") == Some("true");
            if let Some(poly) = m.get("poly") {
                let pm = families::prime(p)?;
                Ok(vec![GeneratorSpec::Inverse {
                    p: pm,
                    f: parse_poly(poly, pm)?,
                    half_only: half,
                }])
            } else {
                families::inverse_family(p, parse_usize("count")?, half)
            }
        }
        "ec" => {
            let fam = families::ec_family(
                parse_u64("p")?,
                parse_u64("a")? as i64,
                parse_u64("b")? as i64,
                parse_u64("gx")?,
                parse_u64("gy")?,
                parse_usize("count")?,
            )?;
            Ok(fam.specs)
        }
        "rudin-shapiro" => Ok(vec![GeneratorSpec::RudinShapiro { n: parse_usize("n")? }]),
        "thue-morse" => Ok(vec![GeneratorSpec::ThueMorse { n: parse_usize("n")? }]),
        "periodic" => {
            let pattern = decode_ascii(m.require("pattern")?.as_bytes())
                .map_err(|e| CliError::usage(format!("bad pattern: {e}")))?;
            Ok(vec![GeneratorSpec::PeriodicPattern {
                pattern,
                reps: parse_usize("reps")?,
            }])
        }
        other => Err(CliError::usage(format!("unknown family {other:?} in manifest"))),
    }
}

fn generate_from_manifest(m: &Manifest, out_dir: &Path) -> CliResult<()> {
    let format = FileFormat::from_name(m.require("format")?)?;
    let specs = specs_from_manifest(m)?;
    std::fs::create_dir_all(out_dir).map_err(|source| CliError::Io {
        path: out_dir.to_path_buf(),
        source,
    })?;
    for (i, spec) in specs.iter().enumerate() {
        let e = spec
            .generate()
            .map_err(|err| CliError::usage(format!("generation failed: {err}")))?;
        let path = out_dir.join(format!("seq_{}", i + 1));
        write_sequence(&path, format, &e)?;
        println!("wrote {} ({} elements)", path.display(), e.len());
    }
    write_text(&out_dir.join("manifest.txt"), &m.render())?;
    println!("wrote {}", out_dir.join("manifest.txt").display());
    Ok(())
}
