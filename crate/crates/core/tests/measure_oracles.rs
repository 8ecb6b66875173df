//! Brute-force oracle equivalence for the measure kernels.
//!
//! The oracles below implement the defining formulas literally (nested
//! loops over every admissible parameter), independent of the library's
//! one-pass searches.

use prseq_core::measures::{
    combined_measure, correlation, evaluate_witness, normality, well_distribution, SearchBounds,
};
use prseq_core::sequence::BinarySequence;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn signs_to_seq(bits: u32, n: usize) -> BinarySequence {
    BinarySequence::from_bit_fn(n, |i| (bits >> i) & 1 == 1).unwrap()
}

fn random_seq(rng: &mut ChaCha8Rng, n: usize) -> BinarySequence {
    BinarySequence::from_bit_fn(n, |_| rng.gen::<bool>()).unwrap()
}

fn w_oracle(e: &[i8]) -> i64 {
    let n = e.len();
    let mut best = 0i64;
    for a in 1..=n {
        for b in 1..=n {
            let mut t = 1;
            while a + (t - 1) * b <= n {
                let sum: i64 = (0..t).map(|j| e[a + j * b - 1] as i64).sum();
                best = best.max(sum.abs());
                t += 1;
            }
        }
    }
    best
}

fn tuples(k: usize, max_d: usize) -> Vec<Vec<usize>> {
    // All 0 <= d_1 < ... < d_k <= max_d.
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, k: usize, max_d: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for d in start..=max_d {
            cur.push(d);
            rec(d + 1, k, max_d, cur, out);
            cur.pop();
        }
    }
    rec(0, k, max_d, &mut cur, &mut out);
    out
}

fn c_oracle(e: &[i8], k: usize) -> i64 {
    let n = e.len();
    let mut best = 0i64;
    for m in 1..=n {
        if n < m {
            continue;
        }
        for d in tuples(k, n - m) {
            let mut sum = 0i64;
            for i in 1..=m {
                let mut prod = 1i64;
                for &dd in &d {
                    prod *= e[i + dd - 1] as i64;
                }
                sum += prod;
            }
            best = best.max(sum.abs());
        }
    }
    best
}

fn q_oracle(e: &[i8], k: usize) -> i64 {
    let n = e.len();
    let mut best = 0i64;
    for d in tuples(k, n - 1) {
        let dk = *d.last().unwrap();
        for a in 1..=n {
            for b in 1..=n {
                let mut t = 0usize;
                while a + t * b + dk <= n {
                    let sum: i64 = (0..=t)
                        .map(|j| {
                            d.iter()
                                .map(|&dd| e[a + j * b + dd - 1] as i64)
                                .product::<i64>()
                        })
                        .sum();
                    best = best.max(sum.abs());
                    t += 1;
                }
            }
        }
    }
    best
}

/// Scaled by 2^k so the comparison is exact integer arithmetic.
fn n_oracle_scaled(e: &[i8], k: usize) -> i64 {
    let n = e.len();
    let mut best = 0i64;
    for pat in 0..(1usize << k) {
        let pattern: Vec<i8> = (0..k).map(|j| if (pat >> j) & 1 == 1 { 1 } else { -1 }).collect();
        for m in 1..=(n + 1 - k) {
            let count = (0..m)
                .filter(|&pos| (0..k).all(|j| e[pos + j] == pattern[j]))
                .count() as i64;
            best = best.max((count * (1 << k) - m as i64).abs());
        }
    }
    best
}

fn check_all(e: &BinarySequence, k_max: usize) {
    let signs: Vec<i8> = e.iter().collect();
    let n = signs.len();
    let exact = SearchBounds::exact();

    let w = well_distribution(e, &exact).unwrap();
    assert_eq!(w.value, w_oracle(&signs) as f64, "W mismatch on {signs:?}");
    assert!(w.exact);
    assert_eq!(evaluate_witness(e, &w.witness).unwrap(), w.value);

    for k in 1..=k_max.min(n) {
        let c = correlation(e, k, &exact).unwrap();
        assert_eq!(c.value, c_oracle(&signs, k) as f64, "C_{k} mismatch on {signs:?}");
        assert_eq!(evaluate_witness(e, &c.witness).unwrap(), c.value);

        let q = combined_measure(e, k, &exact).unwrap();
        assert_eq!(q.value, q_oracle(&signs, k) as f64, "Q_{k} mismatch on {signs:?}");
        assert_eq!(evaluate_witness(e, &q.witness).unwrap(), q.value);

        let nk = normality(e, k).unwrap();
        let scaled = n_oracle_scaled(&signs, k);
        assert_eq!(
            nk.value,
            scaled as f64 / (1u64 << k) as f64,
            "N_{k} mismatch on {signs:?}"
        );
        assert_eq!(evaluate_witness(e, &nk.witness).unwrap(), nk.value);
    }
}

#[test]
fn exhaustive_up_to_n10() {
    for n in 1..=10usize {
        for bits in 0u32..(1 << n) {
            let e = signs_to_seq(bits, n);
            check_all(&e, 3);
        }
    }
}

#[test]
fn random_n11_to_n14() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    for _ in 0..500 {
        let n = rng.gen_range(11..=14);
        let e = random_seq(&mut rng, n);
        check_all(&e, 3);
    }
}

#[test]
fn restricted_search_is_lower_bound_of_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let n = rng.gen_range(8..=14);
        let e = random_seq(&mut rng, n);
        let signs: Vec<i8> = e.iter().collect();
        for k in 1..=3usize {
            let r = correlation(&e, k, &SearchBounds::restricted(2, k as u64 + 1)).unwrap();
            assert!(r.value <= c_oracle(&signs, k) as f64);
            let q = combined_measure(&e, k, &SearchBounds::restricted(2, k as u64 + 1)).unwrap();
            assert!(q.value <= q_oracle(&signs, k) as f64);
        }
    }
}

#[test]
fn sampled_tuples_stay_valid_witnesses() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for seed in 0..20 {
        let n = rng.gen_range(20..=48);
        let e = random_seq(&mut rng, n);
        let bounds = SearchBounds::restricted(1, 4).with_samples(50, seed);
        let r = correlation(&e, 2, &bounds).unwrap();
        assert_eq!(evaluate_witness(&e, &r.witness).unwrap(), r.value);
        assert!(!r.exact);
    }
}
