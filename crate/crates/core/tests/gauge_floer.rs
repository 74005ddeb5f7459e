use std::time::Instant;

use num_integer::Integer;
use proptest::prelude::*;

use homcob::floer::{self, FloerRanks, GradingParity};
use homcob::gauge;
use homcob::SeifertData;

#[test]
fn r_rounding_is_stable_up_to_200() {
    let start = Instant::now();
    let (mut count, mut odd, mut worst) = (0u64, 0u64, 0f64);
    for p in 2..=200u64 {
        for q in p + 1..=200 {
            if p.gcd(&q) != 1 {
                continue;
            }
            for r in q + 1..=200 {
                if p.gcd(&r) != 1 || q.gcd(&r) != 1 {
                    continue;
                }
                let s = SeifertData::new(vec![p, q, r]).unwrap();
                let v = gauge::r_invariant(&s, gauge::R_TOLERANCE)
                    .unwrap_or_else(|e| panic!("Σ({p},{q},{r}): {e}"));
                count += 1;
                odd += (v.value % 2 != 0) as u64;
                worst = worst.max(v.residual);
            }
        }
    }
    println!("{count} triples, {odd} with odd R, worst residual {worst:e}, {:?}", start.elapsed());
    assert!(worst < gauge::R_TOLERANCE);
}

#[test]
fn r_values() {
    let r = |v: &[u64]| gauge::r_invariant(&SeifertData::new(v.to_vec()).unwrap(), gauge::R_TOLERANCE).unwrap().value;
    assert_eq!(r(&[2, 11, 19]), -1);
    assert_eq!(r(&[3, 5, 7]), 1);
    assert!(r(&[2, 3, 13]) < 0);
    // Σ(2,3,13) and Σ(2,3,25) bound contractible manifolds
    assert!(!gauge::r_test(&SeifertData::new(vec![2, 3, 25]).unwrap(), gauge::R_TOLERANCE).unwrap());
}

#[test]
fn casson_closed_form_and_vanishing_mubar() {
    for (p, q) in [(2u64, 3u64), (2, 5), (3, 4), (3, 5)] {
        for k in 1..=3u64 {
            let r = 2 * p * q * k - 1;
            let c = gauge::casson_brieskorn(p, q, r).unwrap();
            assert_eq!(c.lambda as u64 * 12, k * (p * p - 1) * (q * q - 1), "Σ({p},{q},{r})");
            assert_eq!(c.milnor_rank, (p - 1) * (q - 1) * (r - 1));
            let m = homcob::seifert::mubar_seifert(&SeifertData::new(vec![p, q, r]).unwrap()).unwrap();
            assert_eq!(m, 0);
        }
    }
}

#[test]
fn theorem7_casson_matches_lattice_oracle() {
    for p in [3u64, 5, 7] {
        let f = floer::ranks_theorem7(p, 1, true).unwrap();
        let from_ranks = floer::casson_from_ranks(&f).as_integer().unwrap();
        let lattice = gauge::casson_brieskorn(p, p + 1, p + 2).unwrap().lambda;
        assert_eq!(from_ranks.abs(), lattice.abs(), "p = {p}");
    }
    for p in [3u64, 5, 7, 9] {
        for s in 1..=4u64 {
            for plus in [true, false] {
                let tail = if plus { (p * s + 3) as i64 } else { p as i64 * s as i64 - 3 };
                let want = s as i64 * (p * p - 1) as i64 * tail;
                match floer::ranks_theorem7(p, s, plus) {
                    Ok(f) => {
                        assert_eq!(floer::casson_from_ranks(&f).as_integer().unwrap() * 24, want);
                        assert_eq!(floer::nu_from_ranks(&f).numerator, 0);
                    }
                    Err(_) => assert!(want % 48 != 0 || want < 0),
                }
            }
        }
    }
}

#[test]
fn theorem8_casson_matches_closed_form() {
    for (p, q) in [(2u64, 3u64), (2, 5), (3, 4), (3, 5), (2, 7)] {
        for n in 1..=3u64 {
            let f = floer::ranks_theorem8(p, q, n).unwrap();
            let c = floer::casson_from_ranks(&f).as_integer().unwrap();
            assert_eq!(c as u64 * 12, n * (p * p - 1) * (q * q - 1));
            assert_eq!(floer::nu_from_ranks(&f).numerator, 0);
            // the same magnitude as λ(Σ(p, q, 2pqn - 1))
            assert_eq!(c, gauge::casson_brieskorn(p, q, 2 * p * q * n - 1).unwrap().lambda);
        }
    }
}

#[test]
fn nu_vanishes_on_two_periodic_vectors() {
    let mut seen = 0;
    for code in 0..4u32.pow(8) {
        let ranks: [u64; 8] = std::array::from_fn(|i| (code >> (2 * i) & 3) as u64);
        let f = FloerRanks::new(ranks);
        if floer::is_two_periodic(&f) {
            seen += 1;
            assert_eq!(floer::nu_from_ranks(&f).numerator, 0, "{ranks:?}");
        }
    }
    assert_eq!(seen, 16);
    for parity in [GradingParity::Even, GradingParity::Odd] {
        assert_eq!(floer::nu_from_ranks(&floer::ranks_theorem6(parity)).numerator, 0);
    }
}

#[test]
fn theorem2_examples() {
    let t = gauge::theorem2_test(2, 3, 11).unwrap();
    assert!(t.violated);
    assert!(!gauge::theorem2_test(2, 3, 13).unwrap().violated);
    assert!(!gauge::theorem2_test(1, 2, 3).unwrap().violated);
    let t = gauge::theorem2_test(3, 4, 23).unwrap();
    assert!(!t.violated && t.family_undetected);
}

fn triples() -> Vec<(u64, u64, u64)> {
    homcob::checks::coprime_triples(80, 20_000)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn reversal_negates_nu_and_casson(ranks in prop::array::uniform8(0u64..50)) {
        let f = FloerRanks::new(ranks);
        let r = f.reversed();
        prop_assert_eq!(floer::nu_from_ranks(&r).numerator, -floer::nu_from_ranks(&f).numerator);
        prop_assert_eq!(floer::casson_from_ranks(&r).numerator, -floer::casson_from_ranks(&f).numerator);
        prop_assert_eq!(r.reversed(), f);
    }

    #[test]
    fn nu_zero_when_two_periodic(a in 0u64..1000, b in 0u64..1000) {
        let f = FloerRanks::new([a, b, a, b, a, b, a, b]);
        prop_assert_eq!(floer::nu_from_ranks(&f).numerator, 0);
    }

    #[test]
    fn nu_and_casson_parities_agree(ranks in prop::array::uniform8(0u64..50)) {
        let f = FloerRanks::new(ranks);
        let total = f.total() as i64;
        prop_assert_eq!(floer::nu_from_ranks(&f).numerator.rem_euclid(2), total.rem_euclid(2));
        prop_assert_eq!(floer::casson_from_ranks(&f).numerator.rem_euclid(2), total.rem_euclid(2));
    }

    #[test]
    fn signature_identity_samples((p, q, r) in prop::sample::select(triples())) {
        let s = SeifertData::new(vec![p, q, r]).unwrap();
        let g = homcob::seifert::canonical_plumbing(&s);
        let lhs = gauge::sign_minus_kk(&g).unwrap();
        let rhs = gauge::sign_minus_kk_from_milnor_fiber(p, q, r).unwrap();
        prop_assert_eq!(lhs, num_bigint::BigInt::from(rhs));
    }
}
