//! Oracle checks for the statistical-test machinery: Berlekamp-Massey
//! against exhaustive LFSR search, run-length class probabilities against
//! direct enumeration.

use prseq_core::nist::{
    berlekamp_massey, berlekamp_massey_bits, longest_run_length, longest_run_probs,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Minimal L such that some length-L recurrence generates `bits`,
/// by trying every tap set of every length (the spec conventions fall out:
/// L = 0 only generates the all-zero sequence, and any L >= n works
/// vacuously).
fn lfsr_exhaustive(bits: &[u8]) -> usize {
    let n = bits.len();
    if bits.iter().all(|&b| b == 0) {
        return 0;
    }
    for l in 1..n {
        for taps in 0u32..(1 << l) {
            let generates = (l..n).all(|i| {
                let mut acc = 0u8;
                for j in 0..l {
                    acc ^= ((taps >> j) & 1) as u8 & bits[i - l + j];
                }
                acc == bits[i]
            });
            if generates {
                return l;
            }
        }
    }
    n
}

#[test]
fn berlekamp_massey_equals_exhaustive_search() {
    for n in 1..=12usize {
        for v in 0u32..(1 << n) {
            let bits: Vec<u8> = (0..n).map(|i| ((v >> i) & 1) as u8).collect();
            let fit = berlekamp_massey_bits(&bits);
            assert_eq!(
                fit.complexity,
                lfsr_exhaustive(&bits),
                "n={n} bits={bits:?}"
            );
        }
    }
}

#[test]
fn berlekamp_massey_regenerates_ten_thousand_inputs() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xBEEF);
    for _ in 0..10_000 {
        let n: usize = rng.gen_range(1..=512);
        let mut words = vec![0u64; n.div_ceil(64)];
        for w in words.iter_mut() {
            *w = rng.gen();
        }
        let tail = n & 63;
        if tail != 0 {
            *words.last_mut().unwrap() &= (1u64 << tail) - 1;
        }
        let fit = berlekamp_massey(&words, n);
        assert!(fit.complexity <= n);
        assert!(fit.regenerates(&words, n), "n={n}");
    }
}

/// Class probabilities by counting every length-m string.
fn probs_by_enumeration(m: usize, classes: &[(usize, usize)]) -> Vec<f64> {
    let mut counts = vec![0u64; classes.len()];
    for v in 0u32..(1 << m) {
        let run = longest_run_length((0..m).map(|i| (v >> i) & 1 == 1));
        let ci = classes
            .iter()
            .position(|&(lo, hi)| run >= lo && run <= hi)
            .unwrap();
        counts[ci] += 1;
    }
    counts.iter().map(|&c| c as f64 / (1u64 << m) as f64).collect()
}

#[test]
fn longest_run_probs_match_enumeration() {
    for m in 1..=16usize {
        // Singleton classes pin every length probability individually;
        // any coarser partition is a sum of these.
        let singletons: Vec<(usize, usize)> = (0..=m).map(|i| (i, i)).collect();
        let fast = longest_run_probs(m, &singletons).unwrap();
        let slow = probs_by_enumeration(m, &singletons);
        for (i, (f, s)) in fast.iter().zip(&slow).enumerate() {
            assert!((f - s).abs() < 1e-12, "m={m} class={i}: {f} vs {s}");
        }
    }
    // A few composite partitions, including the standard M = 8 table.
    for (m, classes) in [
        (8usize, vec![(0usize, 1usize), (2, 2), (3, 3), (4, 8)]),
        (10, vec![(0, 2), (3, 5), (6, 10)]),
        (16, vec![(0, 0), (1, 7), (8, 16)]),
    ] {
        let fast = longest_run_probs(m, &classes).unwrap();
        let slow = probs_by_enumeration(m, &classes);
        for (f, s) in fast.iter().zip(&slow) {
            assert!((f - s).abs() < 1e-12, "m={m}: {f} vs {s}");
        }
    }
}

#[test]
fn float_path_agrees_with_exact_path_at_boundary() {
    // M = 128 runs the exact 128-bit integer path; the probability-space
    // recurrence must agree with it closely at the same size.
    let classes = [(0usize, 4usize), (5, 5), (6, 6), (7, 7), (8, 8), (9, 128)];
    let exact = longest_run_probs(128, &classes).unwrap();
    // Recompute classes with hi shifted into the float path via M = 129.
    let classes129 = [(0usize, 4usize), (5, 5), (6, 6), (7, 7), (8, 8), (9, 129)];
    let float = longest_run_probs(129, &classes129).unwrap();
    for (a, b) in exact.iter().zip(&float) {
        assert!((a - b).abs() < 2e-3, "{a} vs {b}");
    }
}
