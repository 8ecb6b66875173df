//! Berlekamp-Massey over GF(2), bit-packed.

use alloc::vec::Vec;

/// A minimal-length LFSR fit for a bit sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LfsrFit {
    /// Linear complexity `L`: 0 for the all-zero input, `N` for `(0,..,0,1)`.
    pub complexity: usize,
    /// Connection coefficients `c_0..c_{L-1}` with
    /// `s_{n+L} = c_{L-1} s_{n+L-1} + ... + c_0 s_n (mod 2)`.
    pub taps: Vec<u8>,
}

impl LfsrFit {
    /// Checks that the recurrence reproduces `s_{L}..s_{N-1}` from the
    /// first `L` bits.
    pub fn regenerates(&self, words: &[u64], n: usize) -> bool {
        let l = self.complexity;
        let bit = |i: usize| (words[i >> 6] >> (i & 63)) & 1;
        for i in l..n {
            let mut acc = 0u64;
            for (j, &c) in self.taps.iter().enumerate() {
                acc ^= c as u64 & bit(i - l + j);
            }
            if acc != bit(i) {
                return false;
            }
        }
        true
    }
}

/// Berlekamp-Massey on `n` bits packed LSB-first in `words`.
pub fn berlekamp_massey(words: &[u64], n: usize) -> LfsrFit {
    let poly_words = (n + 1).div_ceil(64) + 1;
    // Reversed copy: srev bit i = s_{n-1-i}, one zero padding word so the
    // window gather below may read one word past the data.
    let mut srev = alloc::vec![0u64; n.div_ceil(64).max(1) + 1];
    for i in 0..n {
        let bit = (words[i >> 6] >> (i & 63)) & 1;
        let r = n - 1 - i;
        srev[r >> 6] |= bit << (r & 63);
    }

    let mut c = alloc::vec![0u64; poly_words];
    let mut b = alloc::vec![0u64; poly_words];
    c[0] = 1;
    b[0] = 1;
    let mut l = 0usize;
    let mut b_len = 1usize; // significant bits of b (deg + 1)
    let mut m = 1usize;
    for i in 0..n {
        // d = sum_{j=0}^{l} c_j s_{i-j} = <c[0..=l], srev shifted by n-1-i>.
        let d = dot_parity(&c, l + 1, &srev, n - 1 - i);
        if d == 1 {
            if 2 * l <= i {
                let t = c.clone();
                let t_len = l + 1;
                xor_shifted(&mut c, &b, b_len, m);
                l = i + 1 - l;
                b = t;
                b_len = t_len;
                m = 1;
            } else {
                xor_shifted(&mut c, &b, b_len, m);
                m += 1;
            }
        } else {
            m += 1;
        }
    }

    let taps = (0..l)
        .map(|t| {
            let j = l - t; // spec tap order reverses the polynomial
            ((c[j >> 6] >> (j & 63)) & 1) as u8
        })
        .collect();
    LfsrFit { complexity: l, taps }
}

/// Convenience entry for explicit 0/1 slices (tests, small inputs).
pub fn berlekamp_massey_bits(bits: &[u8]) -> LfsrFit {
    let mut words = alloc::vec![0u64; bits.len().div_ceil(64).max(1)];
    for (i, &v) in bits.iter().enumerate() {
        debug_assert!(v <= 1);
        words[i >> 6] |= (v as u64 & 1) << (i & 63);
    }
    berlekamp_massey(&words, bits.len())
}

/// Parity of `sum_j a_j * b_{offset+j}` over `len` bits.
#[inline]
fn dot_parity(a: &[u64], len: usize, b: &[u64], offset: usize) -> u64 {
    let mut acc = 0u64;
    let word = offset >> 6;
    let shift = offset & 63;
    let words = len.div_ceil(64);
    for i in 0..words {
        let mut bw = b[word + i] >> shift;
        if shift != 0 {
            bw |= b[word + i + 1] << (64 - shift);
        }
        let mut aw = a[i];
        if i == words - 1 && len & 63 != 0 {
            aw &= (1u64 << (len & 63)) - 1;
        }
        acc ^= aw & bw;
    }
    (acc.count_ones() & 1) as u64
}

/// `dst ^= src << shift`, where `src` holds `src_bits` significant bits.
#[inline]
fn xor_shifted(dst: &mut [u64], src: &[u64], src_bits: usize, shift: usize) {
    let word = shift >> 6;
    let r = shift & 63;
    let words = src_bits.div_ceil(64);
    for i in 0..words {
        let s = src[i];
        if word + i < dst.len() {
            dst[word + i] ^= s << r;
        }
        if r != 0 && word + i + 1 < dst.len() {
            dst[word + i + 1] ^= s >> (64 - r);
        }
    }
}
