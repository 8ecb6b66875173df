//! Exact modular arithmetic over odd prime moduli: powering, Legendre
//! symbol, inverses, primality, primitive roots, and polynomials over F_p.
//!
//! All residues are `u64` with `u128` intermediates; moduli are limited to
//! 64 bits. There is no arbitrary-precision path.

use alloc::vec::Vec;

use crate::{Error, Result};

/// A prime modulus, validated at construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeModulus(u64);

impl PrimeModulus {
    /// Wraps `p` after a deterministic primality check.
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Self(p))
        } else {
            Err(Error::InvalidModulus(p))
        }
    }

    /// Like [`PrimeModulus::new`] but also requires `p` odd (so `p >= 3`).
    pub fn new_odd(p: u64) -> Result<Self> {
        if p >= 3 && is_prime(p) {
            Ok(Self(p))
        } else {
            Err(Error::InvalidModulus(p))
        }
    }

    #[inline]
    pub fn get(self) -> u64 {
        self.0
    }

    #[inline]
    pub fn is_odd(self) -> bool {
        self.0 & 1 == 1
    }

    fn require_odd(self) -> Result<u64> {
        if self.is_odd() {
            Ok(self.0)
        } else {
            Err(Error::InvalidModulus(self.0))
        }
    }
}

#[inline]
pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    (a as u128 * b as u128 % m as u128) as u64
}

/// `base^exponent mod m` by square-and-multiply.
pub fn mod_pow(base: u64, exponent: u64, m: u64) -> Result<u64> {
    if m == 0 {
        return Err(Error::InvalidModulus(0));
    }
    if m == 1 {
        return Ok(0);
    }
    let mut acc = 1u64;
    let mut base = base % m;
    let mut e = exponent;
    while e != 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    Ok(acc)
}

/// Legendre symbol `(n/p)` for odd prime `p`, via Euler's criterion
/// `n^((p-1)/2) mod p`. Returns 0 iff `p | n`.
pub fn legendre_symbol(n: i64, p: PrimeModulus) -> Result<i8> {
    let p = p.require_odd()?;
    let r = n.rem_euclid(p as i64) as u64;
    legendre_symbol_residue(r, p)
}

/// Legendre symbol for an already-reduced residue `r` in `[0, p)`.
#[inline]
pub(crate) fn legendre_symbol_residue(r: u64, p: u64) -> Result<i8> {
    let e = mod_pow(r, (p - 1) / 2, p)?;
    Ok(if e == 0 {
        0
    } else if e == 1 {
        1
    } else {
        debug_assert_eq!(e, p - 1);
        -1
    })
}

/// Least non-negative representative of `a^{-1} mod p` via extended Euclid.
pub fn mod_inverse(a: u64, p: PrimeModulus) -> Result<u64> {
    let p = p.get();
    let a = a % p;
    if a == 0 {
        return Err(Error::NotInvertible(a));
    }
    // Iterative extended Euclid on (p, a); track coefficients of a only.
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "modulus must be prime");
    Ok(t0.rem_euclid(p as i128) as u64)
}

const MILLER_RABIN_BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

/// Deterministic primality test, exact for all 64-bit inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    // Miller-Rabin with a witness set covering all n < 3.3 * 10^24.
    let s = (n - 1).trailing_zeros();
    let d = (n - 1) >> s;
    'witness: for a in MILLER_RABIN_BASES {
        let mut x = mod_pow(a % n, d, n).expect("n >= 2");
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Prime factorization by trial division. Adequate for desk-scale inputs
/// (the factored values here are `p - 1` for p around 10^5).
pub(crate) fn factor_trial(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut push = |q: u64, e: u32| {
        if e > 0 {
            out.push((q, e));
        }
    };
    for q in 2..=3u64 {
        let mut e = 0;
        while n % q == 0 {
            n /= q;
            e += 1;
        }
        push(q, e);
    }
    let mut q = 5u64;
    while q.checked_mul(q).map_or(false, |qq| qq <= n) {
        let mut e = 0;
        while n % q == 0 {
            n /= q;
            e += 1;
        }
        push(q, e);
        q += if q % 6 == 5 { 2 } else { 4 };
    }
    if n > 1 {
        push(n, 1);
    }
    out
}

/// True iff the multiplicative order of `g` mod `p` is `p - 1`.
pub fn is_primitive_root(g: u64, p: PrimeModulus) -> Result<bool> {
    let p = p.require_odd()?;
    let g = g % p;
    if g == 0 {
        return Err(Error::InvalidArgument("primitive-root test needs g != 0 mod p"));
    }
    for (q, _) in factor_trial(p - 1) {
        if mod_pow(g, (p - 1) / q, p)? == 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Polynomial over F_p. Coefficients are stored lowest degree first,
/// reduced to `[0, p)`, with no trailing zero in the leading position
/// (the zero polynomial is an empty coefficient list).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyOverFp {
    coeffs: Vec<u64>,
}

impl PolyOverFp {
    /// Builds a polynomial from signed coefficients, lowest degree first.
    pub fn new(coeffs: &[i64], p: PrimeModulus) -> Self {
        let p = p.get();
        let mut c: Vec<u64> = coeffs.iter().map(|&v| v.rem_euclid(p as i64) as u64).collect();
        while c.last() == Some(&0) {
            c.pop();
        }
        Self { coeffs: c }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    /// `coef * x^deg`.
    pub fn monomial(coef: i64, deg: usize, p: PrimeModulus) -> Self {
        let mut coeffs = alloc::vec![0i64; deg + 1];
        coeffs[deg] = coef;
        Self::new(&coeffs, p)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; 0 for constants and for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    /// Coefficients, lowest degree first.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Horner evaluation at `x`, result in `[0, p)`.
    pub fn eval(&self, x: u64, p: PrimeModulus) -> u64 {
        let p = p.get();
        let x = x % p;
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = mul_mod(acc, x, p);
            acc += c;
            if acc >= p {
                acc -= p;
            }
        }
        acc
    }

    pub fn add(&self, other: &Self, p: PrimeModulus) -> Self {
        let p = p.get();
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut c = alloc::vec![0u64; n];
        for i in 0..n {
            let a = self.coeffs.get(i).copied().unwrap_or(0);
            let b = other.coeffs.get(i).copied().unwrap_or(0);
            let mut s = a + b;
            if s >= p {
                s -= p;
            }
            c[i] = s;
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        Self { coeffs: c }
    }

    pub fn mul(&self, other: &Self, p: PrimeModulus) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let p = p.get();
        let mut c = alloc::vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let prod = mul_mod(a, b, p);
                let mut s = c[i + j] + prod;
                if s >= p {
                    s -= p;
                }
                c[i + j] = s;
            }
        }
        while c.last() == Some(&0) {
            c.pop();
        }
        Self { coeffs: c }
    }

    /// Formal derivative.
    pub fn derivative(&self, p: PrimeModulus) -> Self {
        let p = p.get();
        let c: Vec<u64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| mul_mod(i as u64 % p, a, p))
            .collect();
        let mut out = Self { coeffs: c };
        while out.coeffs.last() == Some(&0) {
            out.coeffs.pop();
        }
        out
    }

    /// `f(-x)`; useful for detecting odd polynomials.
    pub fn compose_neg(&self, p: PrimeModulus) -> Self {
        let p = p.get();
        let c: Vec<u64> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &a)| if i % 2 == 1 && a != 0 { p - a } else { a })
            .collect();
        Self { coeffs: c }
    }

    /// Additive inverse of every coefficient.
    pub fn neg(&self, p: PrimeModulus) -> Self {
        let p = p.get();
        Self {
            coeffs: self.coeffs.iter().map(|&a| if a == 0 { 0 } else { p - a }).collect(),
        }
    }

    /// Monic gcd of `self` and `other` in F_p[x].
    pub fn gcd(&self, other: &Self, p: PrimeModulus) -> Self {
        let pm = p;
        let p = p.get();
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.rem(&b, pm);
            a = b;
            b = r;
        }
        // Normalize monic.
        if let Some(&lead) = a.coeffs.last() {
            if lead != 1 {
                let inv = mod_inverse(lead, pm).expect("leading coefficient nonzero");
                for c in &mut a.coeffs {
                    *c = mul_mod(*c, inv, p);
                }
            }
        }
        a
    }

    /// True iff `f` has no repeated root in the algebraic closure of F_p,
    /// i.e. `gcd(f, f') = 1`. A vanishing derivative (p-th power) counts
    /// as not squarefree.
    pub fn is_squarefree(&self, p: PrimeModulus) -> bool {
        if self.is_zero() {
            return false;
        }
        let d = self.derivative(p);
        if d.is_zero() {
            return self.degree() == 0;
        }
        self.gcd(&d, p).degree() == 0
    }

    fn rem(&self, divisor: &Self, p: PrimeModulus) -> Self {
        let pm = p;
        let p = p.get();
        assert!(!divisor.is_zero(), "division by zero polynomial");
        let mut r = self.coeffs.clone();
        let dlen = divisor.coeffs.len();
        let dlead_inv = mod_inverse(*divisor.coeffs.last().unwrap(), pm).unwrap();
        while r.len() >= dlen {
            let q = mul_mod(*r.last().unwrap(), dlead_inv, p);
            let shift = r.len() - dlen;
            if q != 0 {
                for (i, &dc) in divisor.coeffs.iter().enumerate() {
                    let sub = mul_mod(q, dc, p);
                    let idx = shift + i;
                    r[idx] = if r[idx] >= sub { r[idx] - sub } else { r[idx] + p - sub };
                }
            }
            r.pop();
            while r.last() == Some(&0) {
                r.pop();
            }
        }
        Self { coeffs: r }
    }
}
