//! P-value machinery: complementary error function and the regularized
//! upper incomplete gamma function Q(a, x).

use crate::{Error, Result};

/// Complementary error function, delegated to `libm` (sub-ulp accurate).
pub fn erfc(x: f64) -> f64 {
    libm::erfc(x)
}

const EPS: f64 = 1e-16;
const MAX_ITER: usize = 10_000;
const TINY: f64 = 1e-300;

/// Regularized upper incomplete gamma `Q(a, x) = Γ(a, x)/Γ(a)`.
///
/// Series expansion of `P(a, x)` for `x < a + 1`, modified Lentz continued
/// fraction for `Q(a, x)` otherwise; accurate to better than 1e-10 relative
/// error on `a in [0.5, 500]`, `x in [0, 1e4]`.
pub fn igamc(a: f64, x: f64) -> Result<f64> {
    if !(a > 0.0) || !a.is_finite() || !(x >= 0.0) || !x.is_finite() {
        return Err(Error::InvalidInput("igamc needs a > 0 and x >= 0"));
    }
    if x == 0.0 {
        return Ok(1.0);
    }
    // exp(-x + a ln x - ln Γ(a))
    let prefactor = libm::exp(-x + a * libm::log(x) - libm::lgamma(a));
    if x < a + 1.0 {
        // P(a,x) = prefactor * sum_{n>=0} x^n / (a(a+1)...(a+n)), Q = 1 - P.
        let mut term = 1.0 / a;
        let mut sum = term;
        for n in 1..=MAX_ITER {
            term *= x / (a + n as f64);
            sum += term;
            if libm::fabs(term) < libm::fabs(sum) * EPS {
                return Ok(1.0 - prefactor * sum);
            }
        }
        Err(Error::InvalidInput("igamc series did not converge"))
    } else {
        // Q(a,x) = prefactor * 1/(x+1-a+ K_n(-n(n-a)/(x+2n+1-a))) via Lentz.
        let mut b = x + 1.0 - a;
        let mut c = 1.0 / TINY;
        let mut d = 1.0 / b;
        let mut h = d;
        for i in 1..=MAX_ITER {
            let an = -(i as f64) * (i as f64 - a);
            b += 2.0;
            d = an * d + b;
            if libm::fabs(d) < TINY {
                d = TINY;
            }
            c = b + an / c;
            if libm::fabs(c) < TINY {
                c = TINY;
            }
            d = 1.0 / d;
            let del = d * c;
            h *= del;
            if libm::fabs(del - 1.0) < EPS {
                return Ok(prefactor * h);
            }
        }
        Err(Error::InvalidInput("igamc continued fraction did not converge"))
    }
}
