//! Seeded generators shared by the property and acceptance suites.
#![allow(dead_code)]

use genus_core::seqcore::{is_log_concave, GenusDistribution, ShiftedTerm};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use rand::Rng;

/// Unimodal, trimmed, positive: an ascending run up to a peak, then values
/// no larger than the peak in descending order.
pub fn unimodal(rng: &mut impl Rng, max_len: usize, max_value: u64) -> GenusDistribution {
    let len = rng.gen_range(1..=max_len);
    let peak_at = rng.gen_range(0..len);
    let mut left: Vec<u64> = (0..=peak_at)
        .map(|_| rng.gen_range(1..=max_value))
        .collect();
    left.sort_unstable();
    let top = *left.last().unwrap();
    let mut right: Vec<u64> = (peak_at + 1..len).map(|_| rng.gen_range(1..=top)).collect();
    right.sort_unstable_by(|a, b| b.cmp(a));
    left.extend(right);
    let offset = rng.gen_range(0..=2);
    GenusDistribution::from_u64s(offset, &left).unwrap()
}

/// A random term list: 1..=5 terms, lengths up to 12, shifts up to 6 and
/// weights `p/q` with `q` cleared by scaling the term's entries.
pub fn term_list(rng: &mut impl Rng) -> Vec<ShiftedTerm> {
    let k = rng.gen_range(1..=5);
    (0..k)
        .map(|_| {
            let q: u64 = rng.gen_range(1..=4);
            let p: u64 = rng.gen_range(1..=5);
            let seq = unimodal(rng, 12, 40).scaled(&BigUint::from(q)).unwrap();
            let weight = BigRational::new(BigInt::from(p), BigInt::from(q));
            ShiftedTerm::new(weight, rng.gen_range(0..=6), seq)
        })
        .collect()
}

/// Positive log-concave sequence. Half come from real-rooted products
/// `prod (a_i + b_i x)`, half from rejection sampling.
pub fn log_concave(rng: &mut impl Rng) -> GenusDistribution {
    if rng.gen_bool(0.5) {
        let factors = rng.gen_range(1..=5);
        let mut coeffs = vec![BigUint::from(1u32)];
        for _ in 0..factors {
            let a = BigUint::from(rng.gen_range(1u32..=9));
            let b = BigUint::from(rng.gen_range(1u32..=9));
            let mut next = vec![BigUint::from(0u32); coeffs.len() + 1];
            for (i, c) in coeffs.iter().enumerate() {
                next[i] += c * &a;
                next[i + 1] += c * &b;
            }
            coeffs = next;
        }
        return GenusDistribution::new(rng.gen_range(0..=2), coeffs).unwrap();
    }
    loop {
        let d = unimodal(rng, 7, 60);
        if is_log_concave(&d) {
            return d;
        }
    }
}

/// Whether the shifted supports of every pair of terms intersect.
pub fn supports_pairwise_overlap(terms: &[ShiftedTerm]) -> bool {
    let span = |t: &ShiftedTerm| (t.seq.offset() + t.shift, t.seq.max_genus() + t.shift);
    terms.iter().enumerate().all(|(i, a)| {
        terms[i + 1..].iter().all(|b| {
            let ((a0, a1), (b0, b1)) = (span(a), span(b));
            a0 <= b1 && b0 <= a1
        })
    })
}
