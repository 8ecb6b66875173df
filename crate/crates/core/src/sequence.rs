//! The [`BinarySequence`] type, the sequence generators, and the bit-exact
//! ASCII/PACKED codecs.
//!
//! Storage is bit-packed (`1` bit = `+1`, `0` bit = `-1`, matching the
//! `(1+e)/2` bit form used by the statistical tests) and position-agnostic:
//! the element at storage index `i` (0-based) is whatever the generator's
//! own index convention put there. The Legendre and curve constructions
//! index their defining formulas from `n = 1`, the inverse construction
//! from `n = 0`, and the digit-driven sequences (Rudin-Shapiro,
//! Thue-Morse) from `n = 0`.

use alloc::vec::Vec;

use crate::ecurve::{ec_add, on_curve, CurveFunction, CurvePoint, CurveParams, FunctionValue};
use crate::numtheory::{legendre_symbol_residue, mod_inverse, PolyOverFp, PrimeModulus};
use crate::{Error, ParseError, Result};

/// Hard cap on sequence length (2^28 elements).
pub const MAX_SEQUENCE_LEN: usize = 1 << 28;

/// A finite sequence over `{-1, +1}`, bit-packed into `u64` words.
///
/// Invariants: `1 <= len <= MAX_SEQUENCE_LEN`; unused high bits of the
/// final word are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinarySequence {
    words: Vec<u64>,
    len: usize,
}

impl BinarySequence {
    /// Builds from explicit `{-1, +1}` elements.
    pub fn from_signs(signs: &[i8]) -> Result<Self> {
        let mut b = BitBuilder::with_capacity(signs.len())?;
        for &s in signs {
            match s {
                1 => b.push(true),
                -1 => b.push(false),
                _ => return Err(Error::InvalidInput("sequence elements must be -1 or +1")),
            }
        }
        b.finish()
    }

    /// Builds element `i` (0-based) from `f(i)`, `true` meaning `+1`.
    pub fn from_bit_fn(len: usize, mut f: impl FnMut(usize) -> bool) -> Result<Self> {
        let mut b = BitBuilder::with_capacity(len)?;
        for i in 0..len {
            b.push(f(i));
        }
        b.finish()
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Element at storage index `i` as `+1` or `-1`.
    #[inline]
    pub fn get(&self, i: usize) -> i8 {
        debug_assert!(i < self.len);
        if self.bit(i) == 1 {
            1
        } else {
            -1
        }
    }

    /// Bit form of the element at `i`: `1` for `+1`, `0` for `-1`.
    #[inline]
    pub fn bit(&self, i: usize) -> u64 {
        (self.words[i >> 6] >> (i & 63)) & 1
    }

    /// Packed words, LSB-first. Unused high bits of the last word are zero.
    #[inline]
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = i8> + '_ {
        (0..self.len).map(move |i| self.get(i))
    }

    /// Sum of all elements.
    pub fn element_sum(&self) -> i64 {
        let ones: u64 = self.words.iter().map(|w| w.count_ones() as u64).sum();
        2 * ones as i64 - self.len as i64
    }

    /// Elementwise negation.
    pub fn negated(&self) -> Self {
        let mut words: Vec<u64> = self.words.iter().map(|w| !w).collect();
        mask_tail(&mut words, self.len);
        Self { words, len: self.len }
    }

    /// Bit form `(1 + e_n)/2` of the whole sequence.
    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len).map(|i| self.bit(i) as u8).collect()
    }

    /// Inverse of [`BinarySequence::to_bits`]; rejects symbols outside `{0, 1}`.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        let mut b = BitBuilder::with_capacity(bits.len())?;
        for &v in bits {
            match v {
                0 => b.push(false),
                1 => b.push(true),
                _ => return Err(Error::InvalidInput("bits must be 0 or 1")),
            }
        }
        b.finish()
    }

    /// Copies `len` bits starting at `start` into fresh LSB-first words.
    pub fn extract_bits(&self, start: usize, len: usize) -> Vec<u64> {
        assert!(start + len <= self.len);
        let mut out = alloc::vec![0u64; len.div_ceil(64)];
        for i in 0..len {
            out[i >> 6] |= self.bit(start + i) << (i & 63);
        }
        out
    }
}

fn mask_tail(words: &mut [u64], len: usize) {
    let tail = len & 63;
    if tail != 0 {
        if let Some(last) = words.last_mut() {
            *last &= (1u64 << tail) - 1;
        }
    }
}

/// Incremental builder used by every generator.
pub struct BitBuilder {
    words: Vec<u64>,
    len: usize,
}

impl BitBuilder {
    pub fn with_capacity(len: usize) -> Result<Self> {
        if len == 0 {
            return Err(Error::InvalidInput("sequence length must be at least 1"));
        }
        if len > MAX_SEQUENCE_LEN {
            return Err(Error::TooLarge("sequence length above 2^28 cap"));
        }
        Ok(Self {
            words: Vec::with_capacity(len.div_ceil(64)),
            len: 0,
        })
    }

    #[inline]
    pub fn push(&mut self, plus_one: bool) {
        if self.len & 63 == 0 {
            self.words.push(0);
        }
        if plus_one {
            *self.words.last_mut().unwrap() |= 1u64 << (self.len & 63);
        }
        self.len += 1;
    }

    pub fn finish(self) -> Result<BinarySequence> {
        if self.len == 0 {
            return Err(Error::InvalidInput("sequence length must be at least 1"));
        }
        if self.len > MAX_SEQUENCE_LEN {
            return Err(Error::TooLarge("sequence length above 2^28 cap"));
        }
        Ok(BinarySequence {
            words: self.words,
            len: self.len,
        })
    }
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

/// Legendre-symbol construction: `e_n = (f(n)/p)` for `n = 1..=p`, with the
/// convention `e_n = +1` when `p | f(n)`.
pub fn gen_legendre(p: PrimeModulus, f: &PolyOverFp) -> Result<BinarySequence> {
    if !p.is_odd() {
        return Err(Error::InvalidModulus(p.get()));
    }
    if f.degree() < 1 {
        return Err(Error::InvalidInput("legendre construction needs deg f >= 1"));
    }
    let pv = p.get();
    if pv > MAX_SEQUENCE_LEN as u64 {
        return Err(Error::TooLarge("sequence length above 2^28 cap"));
    }
    let mut b = BitBuilder::with_capacity(pv as usize)?;
    for n in 1..=pv {
        let v = f.eval(n % pv, p);
        b.push(legendre_symbol_residue(v, pv)? >= 0);
    }
    b.finish()
}

/// Multiplicative-inverse construction over `n = 0..p-1` (or the first half
/// `n = 0..=(p-1)/2` when `half_only` is set): `e_n = +1` iff `f(n)` is
/// invertible and its least non-negative inverse is below `p/2`.
pub fn gen_inverse(p: PrimeModulus, f: &PolyOverFp, half_only: bool) -> Result<BinarySequence> {
    if !p.is_odd() {
        return Err(Error::InvalidModulus(p.get()));
    }
    let pv = p.get();
    let len = if half_only { (pv + 1) / 2 } else { pv };
    if len > MAX_SEQUENCE_LEN as u64 {
        return Err(Error::TooLarge("sequence length above 2^28 cap"));
    }
    let half = pv / 2; // p odd: inverse < p/2 iff inverse <= (p-1)/2
    let mut b = BitBuilder::with_capacity(len as usize)?;
    for n in 0..len {
        let v = f.eval(n, p);
        let plus = match mod_inverse(v, p) {
            Ok(inv) => inv <= half,
            Err(_) => false, // p | f(n)
        };
        b.push(plus);
    }
    b.finish()
}

/// Elliptic-curve construction: `e_n = (f(nG)/p)` for `n = 1..=T` along the
/// incremental walk `nG`, with `e_n = +1` whenever `p | f(nG)` or `nG` is
/// the point at infinity.
pub fn gen_ec(
    curve: &CurveParams,
    g: CurvePoint,
    order: u64,
    f: &CurveFunction,
) -> Result<BinarySequence> {
    if !on_curve(g, curve) {
        return Err(Error::InvalidPoint);
    }
    if order > MAX_SEQUENCE_LEN as u64 {
        return Err(Error::TooLarge("sequence length above 2^28 cap"));
    }
    let p = curve.p();
    let pv = p.get();
    let mut b = BitBuilder::with_capacity(order as usize)?;
    let mut walk = CurvePoint::Infinity;
    for _ in 1..=order {
        walk = ec_add(walk, g, curve)?;
        let plus = match f.eval(walk, p) {
            FunctionValue::Value(v) => legendre_symbol_residue(v, pv)? >= 0,
            FunctionValue::UndefinedAtInfinity => true,
        };
        b.push(plus);
    }
    b.finish()
}

/// Rudin-Shapiro sequence for `n = 0..N-1`: sign by the parity of the
/// number of `11` factors in the binary expansion of `n`.
pub fn gen_rudin_shapiro(n: usize) -> Result<BinarySequence> {
    BinarySequence::from_bit_fn(n, |i| (i & (i >> 1)).count_ones() % 2 == 0)
}

/// Thue-Morse sequence for `n = 0..N-1`: sign by binary digit-sum parity.
pub fn gen_thue_morse(n: usize) -> Result<BinarySequence> {
    BinarySequence::from_bit_fn(n, |i| i.count_ones() % 2 == 0)
}

/// Concatenates `reps` copies of `pattern`.
pub fn gen_periodic(pattern: &BinarySequence, reps: usize) -> Result<BinarySequence> {
    if reps == 0 {
        return Err(Error::InvalidInput("repetition count must be positive"));
    }
    let total = pattern
        .len()
        .checked_mul(reps)
        .ok_or(Error::TooLarge("sequence length above 2^28 cap"))?;
    BinarySequence::from_bit_fn(total, |i| pattern.bit(i % pattern.len()) == 1)
}

/// A fully parameterized generator choice.
#[derive(Debug, Clone)]
pub enum GeneratorSpec {
    Legendre {
        p: PrimeModulus,
        f: PolyOverFp,
    },
    Inverse {
        p: PrimeModulus,
        f: PolyOverFp,
        half_only: bool,
    },
    EllipticCurve {
        curve: CurveParams,
        g: CurvePoint,
        order: u64,
        f: CurveFunction,
    },
    RudinShapiro {
        n: usize,
    },
    ThueMorse {
        n: usize,
    },
    PeriodicPattern {
        pattern: BinarySequence,
        reps: usize,
    },
}

impl GeneratorSpec {
    pub fn generate(&self) -> Result<BinarySequence> {
        match self {
            Self::Legendre { p, f } => gen_legendre(*p, f),
            Self::Inverse { p, f, half_only } => gen_inverse(*p, f, *half_only),
            Self::EllipticCurve { curve, g, order, f } => gen_ec(curve, *g, *order, f),
            Self::RudinShapiro { n } => gen_rudin_shapiro(*n),
            Self::ThueMorse { n } => gen_thue_morse(*n),
            Self::PeriodicPattern { pattern, reps } => gen_periodic(pattern, *reps),
        }
    }
}

// ---------------------------------------------------------------------------
// Codecs
// ---------------------------------------------------------------------------

/// ASCII encoding: one `'0'`/`'1'` byte per bit plus a trailing newline.
pub fn encode_ascii(e: &BinarySequence) -> Vec<u8> {
    let mut out = Vec::with_capacity(e.len() + 1);
    for i in 0..e.len() {
        out.push(if e.bit(i) == 1 { b'1' } else { b'0' });
    }
    out.push(b'\n');
    out
}

/// Parses ASCII bits; whitespace is ignored, anything else is a
/// [`ParseError::BadSymbol`] at its byte offset.
pub fn decode_ascii(bytes: &[u8]) -> Result<BinarySequence> {
    let mut b = BitBuilder::with_capacity(bytes.len().max(1))?;
    for (offset, &c) in bytes.iter().enumerate() {
        match c {
            b'0' => b.push(false),
            b'1' => b.push(true),
            b' ' | b'\t' | b'\r' | b'\n' => {}
            _ => return Err(ParseError::BadSymbol(offset).into()),
        }
    }
    b.finish().map_err(|_| ParseError::InvalidLength(0).into())
}

/// PACKED encoding: an 8-byte little-endian bit-length header, then
/// `ceil(N/8)` payload bytes, little-endian bit order within each byte,
/// final partial byte zero-padded in its high bits.
pub fn encode_packed(e: &BinarySequence) -> Vec<u8> {
    let n = e.len();
    let mut out = Vec::with_capacity(8 + n.div_ceil(8));
    out.extend_from_slice(&(n as u64).to_le_bytes());
    let mut byte = 0u8;
    for i in 0..n {
        byte |= (e.bit(i) as u8) << (i & 7);
        if i & 7 == 7 {
            out.push(byte);
            byte = 0;
        }
    }
    if n & 7 != 0 {
        out.push(byte);
    }
    out
}

/// Parses the PACKED format, validating header, payload size, and padding.
pub fn decode_packed(bytes: &[u8]) -> Result<BinarySequence> {
    if bytes.len() < 8 {
        return Err(ParseError::MalformedHeader(bytes.len()).into());
    }
    let declared = u64::from_le_bytes(bytes[..8].try_into().unwrap());
    if declared == 0 || declared > MAX_SEQUENCE_LEN as u64 {
        return Err(ParseError::InvalidLength(declared).into());
    }
    let n = declared as usize;
    let expected = n.div_ceil(8);
    let payload = &bytes[8..];
    if payload.len() < expected {
        return Err(ParseError::TruncatedPayload {
            declared,
            expected,
            actual: payload.len(),
        }
        .into());
    }
    if payload.len() > expected {
        return Err(ParseError::TrailingData(payload.len() - expected).into());
    }
    if n & 7 != 0 {
        let pad_mask = !((1u16 << (n & 7)) - 1) as u8;
        if payload[expected - 1] & pad_mask != 0 {
            return Err(ParseError::BadPadding.into());
        }
    }
    BinarySequence::from_bit_fn(n, |i| (payload[i >> 3] >> (i & 7)) & 1 == 1)
}
