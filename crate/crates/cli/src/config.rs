//! Suite configuration files: line-oriented `key=value` with `#` comments.
//!
//! Keys: `alpha`, `block_frequency_m`, `linear_complexity_m`,
//! `longest_run_m` (a block length or `auto`).

use std::path::Path;

use prseq_core::nist::SuiteParams;

use crate::{CliError, CliResult};

pub fn parse_suite_config(text: &str, base: SuiteParams) -> CliResult<SuiteParams> {
    let mut params = base;
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once('=') else {
            return Err(CliError::usage(format!(
                "config line {} is not key=value: {line:?}",
                lineno + 1
            )));
        };
        let (key, value) = (key.trim(), value.trim());
        let bad = |what: &str| CliError::usage(format!("config line {}: bad {what}: {value:?}", lineno + 1));
        match key {
            "alpha" => {
                let v: f64 = value.parse().map_err(|_| bad("alpha"))?;
                if !(0.0 < v && v < 1.0) {
                    return Err(bad("alpha (need 0 < alpha < 1)"));
                }
                params.alpha = v;
            }
            "block_frequency_m" => {
                params.block_frequency_m = value.parse().map_err(|_| bad("block length"))?;
            }
            "linear_complexity_m" => {
                params.linear_complexity_m = value.parse().map_err(|_| bad("block length"))?;
            }
            "longest_run_m" => {
                params.longest_run_m = if value == "auto" {
                    None
                } else {
                    Some(value.parse().map_err(|_| bad("block length"))?)
                };
            }
            _ => return Err(CliError::usage(format!("unknown config key {key:?}"))),
        }
    }
    Ok(params)
}

pub fn load_suite_config(path: &Path, base: SuiteParams) -> CliResult<SuiteParams> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_suite_config(&text, base)
}
