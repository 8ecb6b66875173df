//! Parser for polynomial arguments like `x^31+1`, `3x^2 - 10x + 5`.

use prseq_core::numtheory::{PolyOverFp, PrimeModulus};

use crate::{CliError, CliResult};

/// Parses a univariate polynomial over F_p. Terms are `C`, `x`, `Cx`,
/// `x^E`, or `Cx^E`, joined by `+`/`-`; whitespace is ignored.
pub fn parse_poly(input: &str, p: PrimeModulus) -> CliResult<PolyOverFp> {
    let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(CliError::usage("empty polynomial"));
    }
    let mut coeffs: Vec<i128> = Vec::new();
    let bytes = s.as_bytes();
    let mut i = 0usize;
    let mut sign = 1i128;
    // Optional leading sign.
    if bytes[0] == b'+' || bytes[0] == b'-' {
        sign = if bytes[0] == b'-' { -1 } else { 1 };
        i = 1;
    }
    loop {
        // Coefficient digits (optional when the term has an x).
        let digit_start = i;
        while i < bytes.len() && bytes[i].is_ascii_digit() {
            i += 1;
        }
        let coef: Option<i128> = if i > digit_start {
            Some(
                s[digit_start..i]
                    .parse::<i128>()
                    .map_err(|_| CliError::usage(format!("bad coefficient in {input:?}")))?,
            )
        } else {
            None
        };
        let mut degree = 0usize;
        if i < bytes.len() && (bytes[i] == b'x' || bytes[i] == b'X') {
            i += 1;
            degree = 1;
            if i < bytes.len() && bytes[i] == b'^' {
                i += 1;
                let exp_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if i == exp_start {
                    return Err(CliError::usage(format!("missing exponent in {input:?}")));
                }
                degree = s[exp_start..i]
                    .parse::<usize>()
                    .map_err(|_| CliError::usage(format!("bad exponent in {input:?}")))?;
                if degree > 10_000 {
                    return Err(CliError::usage("polynomial degree above 10000"));
                }
            }
        } else if coef.is_none() {
            return Err(CliError::usage(format!(
                "expected term at byte {i} of {input:?}"
            )));
        }
        if coeffs.len() <= degree {
            coeffs.resize(degree + 1, 0);
        }
        coeffs[degree] += sign * coef.unwrap_or(1);

        if i == bytes.len() {
            break;
        }
        sign = match bytes[i] {
            b'+' => 1,
            b'-' => -1,
            _ => {
                return Err(CliError::usage(format!(
                    "unexpected {:?} at byte {i} of {input:?}",
                    s[i..].chars().next().unwrap()
                )))
            }
        };
        i += 1;
        if i == bytes.len() {
            return Err(CliError::usage(format!("trailing operator in {input:?}")));
        }
    }
    let pv = p.get() as i128;
    let reduced: Vec<i64> = coeffs.iter().map(|&c| c.rem_euclid(pv) as i64).collect();
    Ok(PolyOverFp::new(&reduced, p))
}
