//! Discrete Fourier transform for arbitrary lengths: iterative radix-2 for
//! powers of two, Bluestein's chirp-z reduction otherwise.

use alloc::vec::Vec;

use num_complex::Complex64;

const PI: f64 = core::f64::consts::PI;

/// Forward DFT `X_k = sum_n x_n exp(-2 pi i k n / N)` for any `N >= 1`.
pub fn dft(input: &[Complex64]) -> Vec<Complex64> {
    let n = input.len();
    if n <= 1 {
        return input.to_vec();
    }
    if n.is_power_of_two() {
        let plan = Radix2::new(n);
        let mut buf = input.to_vec();
        plan.forward(&mut buf);
        buf
    } else {
        bluestein(input)
    }
}

struct Radix2 {
    n: usize,
    /// exp(-2 pi i j / n) for j in 0..n/2, indexed per stage by stride.
    twiddles: Vec<Complex64>,
}

impl Radix2 {
    fn new(n: usize) -> Self {
        debug_assert!(n.is_power_of_two() && n >= 2);
        let twiddles = (0..n / 2)
            .map(|j| {
                let ang = -2.0 * PI * j as f64 / n as f64;
                Complex64::new(libm::cos(ang), libm::sin(ang))
            })
            .collect();
        Self { n, twiddles }
    }

    fn forward(&self, buf: &mut [Complex64]) {
        self.run(buf, false);
    }

    fn inverse(&self, buf: &mut [Complex64]) {
        self.run(buf, true);
        let scale = 1.0 / self.n as f64;
        for v in buf.iter_mut() {
            *v *= scale;
        }
    }

    fn run(&self, buf: &mut [Complex64], inverse: bool) {
        let n = self.n;
        debug_assert_eq!(buf.len(), n);
        // Bit-reversal permutation.
        let mut j = 0usize;
        for i in 1..n {
            let mut bit = n >> 1;
            while j & bit != 0 {
                j ^= bit;
                bit >>= 1;
            }
            j ^= bit;
            if i < j {
                buf.swap(i, j);
            }
        }
        let mut len = 2;
        while len <= n {
            let half = len / 2;
            let stride = n / len;
            let mut start = 0;
            while start < n {
                for k in 0..half {
                    let mut w = self.twiddles[k * stride];
                    if inverse {
                        w = w.conj();
                    }
                    let t = w * buf[start + k + half];
                    let u = buf[start + k];
                    buf[start + k] = u + t;
                    buf[start + k + half] = u - t;
                }
                start += len;
            }
            len <<= 1;
        }
    }
}

/// Bluestein's algorithm: the length-n DFT as a circular convolution of
/// chirp-modulated data, carried by a padded radix-2 FFT.
///
/// Chirp phases use `j^2 mod 2n` computed in integers, so the phase stays
/// accurate at large `n`.
fn bluestein(input: &[Complex64]) -> Vec<Complex64> {
    let n = input.len();
    let l = (2 * n - 1).next_power_of_two();
    let plan = Radix2::new(l);

    let chirp = |j: usize, sign: f64| -> Complex64 {
        let r = (j as u128 * j as u128 % (2 * n) as u128) as f64;
        let ang = sign * PI * r / n as f64;
        Complex64::new(libm::cos(ang), libm::sin(ang))
    };

    let mut a = alloc::vec![Complex64::new(0.0, 0.0); l];
    for j in 0..n {
        a[j] = input[j] * chirp(j, -1.0);
    }
    let mut b = alloc::vec![Complex64::new(0.0, 0.0); l];
    b[0] = chirp(0, 1.0);
    for j in 1..n {
        let c = chirp(j, 1.0);
        b[j] = c;
        b[l - j] = c;
    }

    plan.forward(&mut a);
    plan.forward(&mut b);
    for (x, y) in a.iter_mut().zip(&b) {
        *x *= *y;
    }
    plan.inverse(&mut a);

    (0..n).map(|k| a[k] * chirp(k, -1.0)).collect()
}

/// Quadratic-time reference DFT, the oracle for the fast paths.
pub fn dft_direct(input: &[Complex64]) -> Vec<Complex64> {
    let n = input.len();
    (0..n)
        .map(|k| {
            let mut acc = Complex64::new(0.0, 0.0);
            for (j, &x) in input.iter().enumerate() {
                let r = (j as u128 * k as u128 % n as u128) as f64;
                let ang = -2.0 * PI * r / n as f64;
                acc += x * Complex64::new(libm::cos(ang), libm::sin(ang));
            }
            acc
        })
        .collect()
}
