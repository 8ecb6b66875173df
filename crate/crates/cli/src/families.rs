//! The three experiment families: parameterized generator specs matching
//! the numerical setups (20 sequences each by default).

use prseq_core::ecurve::{count_points, on_curve, CurveFunction, CurvePoint, CurveParams};
use prseq_core::numtheory::{PolyOverFp, PrimeModulus};
use prseq_core::sequence::GeneratorSpec;

use crate::{CliError, CliResult};

pub fn prime(p: u64) -> CliResult<PrimeModulus> {
    PrimeModulus::new_odd(p).map_err(|_| CliError::usage(format!("{p} is not an odd prime")))
}

/// Legendre family: `f_i(x) = x^degree + i` for `i = 1..=count`.
pub fn legendre_family(p: u64, degree: usize, count: usize) -> CliResult<Vec<GeneratorSpec>> {
    let p = prime(p)?;
    if degree == 0 {
        return Err(CliError::usage("legendre family needs degree >= 1"));
    }
    (1..=count as i64)
        .map(|i| {
            let f = PolyOverFp::monomial(1, degree, p).add(&PolyOverFp::new(&[i], p), p);
            Ok(GeneratorSpec::Legendre { p, f })
        })
        .collect()
}

/// Inverse family: `f_i(x) = x * prod_{j=15(i-1)+1}^{15i} (x^2 + j^2)`,
/// `i = 1..=count`, each of degree 31.
pub fn inverse_family(p: u64, count: usize, half_only: bool) -> CliResult<Vec<GeneratorSpec>> {
    let p = prime(p)?;
    (1..=count as u64)
        .map(|i| {
            let mut f = PolyOverFp::new(&[0, 1], p); // x
            for j in 15 * (i - 1) + 1..=15 * i {
                let j2 = (j * j % p.get()) as i64;
                f = f.mul(&PolyOverFp::new(&[j2, 0, 1], p), p);
            }
            Ok(GeneratorSpec::Inverse { p, f, half_only })
        })
        .collect()
}

/// Curve family over `y^2 = x^3 + Ax + B`: `f_i = x^31 + x + y + i` for
/// `i = 0..count`. The group order is computed by the point-count sweep.
pub struct EcFamily {
    pub curve: CurveParams,
    pub generator: CurvePoint,
    pub order: u64,
    pub specs: Vec<GeneratorSpec>,
}

pub fn ec_family(p: u64, a: i64, b: i64, gx: u64, gy: u64, count: usize) -> CliResult<EcFamily> {
    let pm = prime(p)?;
    let curve = CurveParams::new(pm, a, b)
        .map_err(|e| CliError::usage(format!("invalid curve: {e}")))?;
    let generator = CurvePoint::affine(gx, gy);
    if !on_curve(generator, &curve) {
        return Err(CliError::usage(format!("({gx},{gy}) is not on the curve")));
    }
    let order = count_points(&curve)
        .map_err(|e| CliError::usage(format!("cannot count points: {e}")))?;
    let specs = (0..count as i64)
        .map(|i| {
            let f = CurveFunction::from_terms(&[(1, 31, 0), (1, 1, 0), (1, 0, 1), (i, 0, 0)], &curve);
            GeneratorSpec::EllipticCurve {
                curve,
                g: generator,
                order,
                f,
            }
        })
        .collect();
    Ok(EcFamily {
        curve,
        generator,
        order,
        specs,
    })
}
