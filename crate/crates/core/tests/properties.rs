mod common;

use genus_core::graphfam::poly_product;
use genus_core::seqcore::{
    combine, criterion_window, is_log_concave, is_unimodal, mode_interval,
    window_unimodality_check, GenusDistribution, ShiftedTerm,
};
use num_bigint::BigUint;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn unimodal_seq() -> impl Strategy<Value = GenusDistribution> {
    (
        0usize..3,
        prop::collection::vec(1u64..30, 1..7),
        prop::collection::vec(1u64..30, 0..6),
    )
        .prop_map(|(offset, mut up, mut down)| {
            up.sort_unstable();
            let top = *up.last().unwrap();
            for d in &mut down {
                *d = (*d).min(top);
            }
            down.sort_unstable_by(|a, b| b.cmp(a));
            up.extend(down);
            GenusDistribution::from_u64s(offset, &up).unwrap()
        })
}

fn terms() -> impl Strategy<Value = Vec<ShiftedTerm>> {
    prop::collection::vec((unimodal_seq(), 1u64..6, 0usize..7), 1..6).prop_map(|v| {
        v.into_iter()
            .map(|(seq, w, shift)| ShiftedTerm::int(w, shift, seq))
            .collect()
    })
}

fn entry(d: &GenusDistribution, g: usize) -> BigUint {
    d.get(g)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn combination_flanks_are_monotone(ts in terms()) {
        let z = combine(&ts).unwrap();
        let w = criterion_window(&ts).unwrap();
        for g in z.offset()..w.lo {
            prop_assert!(entry(&z, g) <= entry(&z, g + 1));
        }
        for g in w.hi..z.max_genus() {
            prop_assert!(entry(&z, g) >= entry(&z, g + 1));
        }
    }

    #[test]
    fn window_verdict_matches_full_check(ts in terms()) {
        let v = window_unimodality_check(&ts).unwrap();
        prop_assert_eq!(v.unimodal, is_unimodal(&v.combined));
        prop_assert!(v.full_check_agrees);
    }

    #[test]
    fn combination_is_trimmed(ts in terms()) {
        let z = combine(&ts).unwrap();
        prop_assert!(z.counts()[0] > BigUint::from(0u32));
        prop_assert!(*z.counts().last().unwrap() > BigUint::from(0u32));
    }

    #[test]
    fn scaling_keeps_modes(d in unimodal_seq(), k in 1u64..1000) {
        let scaled = d.scaled(&BigUint::from(k)).unwrap();
        prop_assert_eq!(mode_interval(&d), mode_interval(&scaled));
    }

    #[test]
    fn positive_log_concave_is_unimodal(v in prop::collection::vec(1u64..50, 1..10)) {
        let d = GenusDistribution::from_u64s(0, &v).unwrap();
        if is_log_concave(&d) {
            prop_assert!(is_unimodal(&d));
        }
    }

    #[test]
    fn single_term_is_unimodal(d in unimodal_seq(), w in 1u64..9, shift in 0usize..7) {
        let v = window_unimodality_check(&[ShiftedTerm::int(w, shift, d)]).unwrap();
        prop_assert!(v.unimodal);
    }
}

#[test]
fn product_closure() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..500 {
        let a = common::log_concave(&mut rng);
        let b = common::log_concave(&mut rng);
        assert!(is_log_concave(&poly_product(&a, &b)), "{a} * {b}");
        let u = common::unimodal(&mut rng, 10, 50);
        assert!(is_unimodal(&poly_product(&a, &u)), "{a} * {u}");
    }
}

#[test]
fn random_terms_are_valid() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for _ in 0..200 {
        let ts = common::term_list(&mut rng);
        assert!(ts.iter().all(|t| is_unimodal(&t.seq)));
        combine(&ts).unwrap();
    }
}
