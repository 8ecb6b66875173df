//! Short Weierstrass elliptic-curve arithmetic over F_p in affine
//! coordinates, exhaustive point counting, and evaluation of polynomial
//! functions in the coordinate ring.

use alloc::vec::Vec;

use crate::numtheory::{legendre_symbol_residue, mod_inverse, mul_mod, PolyOverFp, PrimeModulus};
use crate::{Error, Result};

/// Sweep limit for [`count_points`]; the O(p) Legendre scan stays cheap
/// below this.
pub const COUNT_SWEEP_LIMIT: u64 = 1 << 26;

/// `y^2 = x^3 + Ax + B` over F_p with nonzero discriminant.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CurveParams {
    p: PrimeModulus,
    a: u64,
    b: u64,
}

impl CurveParams {
    /// Validates `p > 3` and `-16(4A^3 + 27B^2) != 0 mod p`.
    pub fn new(p: PrimeModulus, a: i64, b: i64) -> Result<Self> {
        let pv = p.get();
        if pv <= 3 {
            return Err(Error::InvalidModulus(pv));
        }
        let a = a.rem_euclid(pv as i64) as u64;
        let b = b.rem_euclid(pv as i64) as u64;
        let a3 = mul_mod(mul_mod(a, a, pv), a, pv);
        let b2 = mul_mod(b, b, pv);
        let disc = (4 * a3 as u128 + 27 * b2 as u128) % pv as u128;
        if disc == 0 {
            return Err(Error::InvalidCurve(pv));
        }
        Ok(Self { p, a, b })
    }

    #[inline]
    pub fn p(&self) -> PrimeModulus {
        self.p
    }

    #[inline]
    pub fn a(&self) -> u64 {
        self.a
    }

    #[inline]
    pub fn b(&self) -> u64 {
        self.b
    }

    /// `x^3 + Ax + B mod p`.
    #[inline]
    pub fn rhs(&self, x: u64) -> u64 {
        let p = self.p.get();
        let x2 = mul_mod(x, x, p);
        let x3 = mul_mod(x2, x, p);
        let ax = mul_mod(self.a, x, p);
        let mut s = x3 + ax;
        if s >= p {
            s -= p;
        }
        s += self.b;
        if s >= p {
            s -= p;
        }
        s
    }
}

/// Affine point or the point at infinity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CurvePoint {
    Infinity,
    Affine { x: u64, y: u64 },
}

impl CurvePoint {
    pub fn affine(x: u64, y: u64) -> Self {
        Self::Affine { x, y }
    }

    pub fn is_infinity(&self) -> bool {
        matches!(self, Self::Infinity)
    }
}

/// True for the point at infinity, and for affine points iff the curve
/// equation holds.
pub fn on_curve(point: CurvePoint, c: &CurveParams) -> bool {
    match point {
        CurvePoint::Infinity => true,
        CurvePoint::Affine { x, y } => {
            let p = c.p.get();
            x < p && y < p && mul_mod(y, y, p) == c.rhs(x)
        }
    }
}

/// Group law by chord-and-tangent. Inputs are validated in debug builds.
pub fn ec_add(lhs: CurvePoint, rhs: CurvePoint, c: &CurveParams) -> Result<CurvePoint> {
    debug_assert!(on_curve(lhs, c), "ec_add: lhs off curve");
    debug_assert!(on_curve(rhs, c), "ec_add: rhs off curve");
    let p = c.p.get();
    let (x1, y1) = match lhs {
        CurvePoint::Infinity => return Ok(rhs),
        CurvePoint::Affine { x, y } => (x, y),
    };
    let (x2, y2) = match rhs {
        CurvePoint::Infinity => return Ok(lhs),
        CurvePoint::Affine { x, y } => (x, y),
    };
    let slope = if x1 != x2 {
        let num = sub_mod(y2, y1, p);
        let den = sub_mod(x2, x1, p);
        mul_mod(num, mod_inverse(den, c.p)?, p)
    } else if y1 != y2 || y1 == 0 {
        // x1 == x2 with y2 = -y1 (or a 2-torsion point doubling).
        return Ok(CurvePoint::Infinity);
    } else {
        // Tangent slope (3x^2 + A) / (2y).
        let x1sq = mul_mod(x1, x1, p);
        let mut num = mul_mod(3 % p, x1sq, p) + c.a;
        if num >= p {
            num -= p;
        }
        let den = mul_mod(2, y1, p);
        mul_mod(num, mod_inverse(den, c.p)?, p)
    };
    let x3 = sub_mod(sub_mod(mul_mod(slope, slope, p), x1, p), x2, p);
    let y3 = sub_mod(mul_mod(slope, sub_mod(x1, x3, p), p), y1, p);
    Ok(CurvePoint::Affine { x: x3, y: y3 })
}

/// Additive inverse `-(x, y) = (x, p - y)`.
pub fn ec_neg(point: CurvePoint, c: &CurveParams) -> CurvePoint {
    match point {
        CurvePoint::Infinity => CurvePoint::Infinity,
        CurvePoint::Affine { x, y } => CurvePoint::Affine {
            x,
            y: if y == 0 { 0 } else { c.p.get() - y },
        },
    }
}

/// `n * P` by double-and-add; `0 * P` is the point at infinity.
pub fn ec_scalar_mul(n: u64, point: CurvePoint, c: &CurveParams) -> Result<CurvePoint> {
    if !on_curve(point, c) {
        return Err(Error::InvalidPoint);
    }
    let mut acc = CurvePoint::Infinity;
    let mut base = point;
    let mut n = n;
    while n != 0 {
        if n & 1 == 1 {
            acc = ec_add(acc, base, c)?;
        }
        base = ec_add(base, base, c)?;
        n >>= 1;
    }
    Ok(acc)
}

/// `#E(F_p) = p + 1 + sum_x (x^3 + Ax + B | p)` by an O(p) sweep.
pub fn count_points(c: &CurveParams) -> Result<u64> {
    let p = c.p.get();
    if p > COUNT_SWEEP_LIMIT {
        return Err(Error::TooLarge("point-count sweep limit exceeded"));
    }
    let mut count = p as i128 + 1;
    for x in 0..p {
        count += legendre_symbol_residue(c.rhs(x), p)? as i128;
    }
    Ok(count as u64)
}

#[inline]
fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

/// A polynomial element of the coordinate ring F_p[x, y] / (y^2 - x^3 - Ax - B),
/// stored in the reduced form `u(x) + y * v(x)`.
///
/// This covers the polynomial subring of the curve's function field, which
/// is all the constructions here need. The degree of the function (pole
/// order at infinity) uses `deg x = 2`, `deg y = 3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveFunction {
    u: PolyOverFp,
    v: PolyOverFp,
}

/// Result of evaluating a curve function at a point.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FunctionValue {
    Value(u64),
    /// Affine evaluation is undefined at the point at infinity.
    UndefinedAtInfinity,
}

impl CurveFunction {
    /// Builds a function from monomials `(coef, deg_x, deg_y)`, reducing
    /// powers of `y` with the curve equation.
    pub fn from_terms(terms: &[(i64, usize, usize)], c: &CurveParams) -> Self {
        let p = c.p();
        let rhs = PolyOverFp::new(
            &[c.b() as i64, c.a() as i64, 0, 1], // B + Ax + x^3
            p,
        );
        let mut u = PolyOverFp::zero();
        let mut v = PolyOverFp::zero();
        for &(coef, dx, dy) in terms {
            let mut part = PolyOverFp::monomial(coef, dx, p);
            let mut y_odd = false;
            // y^(2m) = rhs^m, y^(2m+1) = y * rhs^m.
            for _ in 0..dy {
                if y_odd {
                    part = part.mul(&rhs, p);
                }
                y_odd = !y_odd;
            }
            if y_odd {
                v = v.add(&part, p);
            } else {
                u = u.add(&part, p);
            }
        }
        Self { u, v }
    }

    /// Pure polynomial in `x` (no `y` part).
    pub fn from_x_poly(f: PolyOverFp) -> Self {
        Self {
            u: f,
            v: PolyOverFp::zero(),
        }
    }

    /// Degree in the function field: max over monomials of `2 deg_x + 3 deg_y`
    /// on the y-reduced form.
    pub fn degree(&self) -> usize {
        let du = if self.u.is_zero() { None } else { Some(2 * self.u.degree()) };
        let dv = if self.v.is_zero() { None } else { Some(2 * self.v.degree() + 3) };
        du.into_iter().chain(dv).max().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }

    /// Evaluates at an affine point; the point at infinity yields
    /// [`FunctionValue::UndefinedAtInfinity`].
    pub fn eval(&self, point: CurvePoint, p: PrimeModulus) -> FunctionValue {
        match point {
            CurvePoint::Infinity => FunctionValue::UndefinedAtInfinity,
            CurvePoint::Affine { x, y } => {
                let pv = p.get();
                let mut val = self.u.eval(x, p) + mul_mod(y % pv, self.v.eval(x, p), pv);
                if val >= pv {
                    val -= pv;
                }
                FunctionValue::Value(val)
            }
        }
    }
}

/// All points of a small curve by brute force; test and small-scale helper.
pub fn enumerate_points(c: &CurveParams) -> Vec<CurvePoint> {
    let p = c.p.get();
    let mut pts = alloc::vec![CurvePoint::Infinity];
    for x in 0..p {
        let rhs = c.rhs(x);
        for y in 0..p {
            if mul_mod(y, y, p) == rhs {
                pts.push(CurvePoint::Affine { x, y });
            }
        }
    }
    pts
}
