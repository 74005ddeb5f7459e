use num_bigint::BigInt;
use num_integer::Integer;
use proptest::prelude::*;

use homcob::gauge;
use homcob::gf2;
use homcob::graph::{self, PlumbingGraph};
use homcob::seifert::{self, Orientation, SeifertData, SurgerySign};
use homcob::wu;

fn coprime(v: &[u64]) -> bool {
    v.iter().enumerate().all(|(i, &a)| v[i + 1..].iter().all(|&b| a.gcd(&b) == 1))
}

/// Increasing pairwise coprime `n`-tuples with entries in `2..=max`.
fn tuples(n: usize, max: u64) -> Vec<Vec<u64>> {
    fn go(n: usize, max: u64, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        let start = cur.last().map_or(2, |&l| l + 1);
        for x in start..=max {
            cur.push(x);
            if coprime(cur) {
                go(n, max, cur, out);
            }
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max, &mut Vec::new(), &mut out);
    out
}

fn coprime_tuple(n: usize, max: u64) -> impl Strategy<Value = Vec<u64>> {
    prop::sample::select(tuples(n, max))
}

/// Homology-sphere plumbings: canonical resolutions followed by random
/// blow-ups, so the graphs are not all star-shaped and negative definite.
fn homology_sphere_graph() -> impl Strategy<Value = PlumbingGraph> {
    let small: Vec<PlumbingGraph> = tuples(3, 20)
        .into_iter()
        .map(|v| seifert::canonical_plumbing(&SeifertData::new(v).unwrap()))
        .filter(|g| g.len() <= 8)
        .collect();
    (prop::sample::select(small), prop::collection::vec(any::<usize>(), 0..=4)).prop_map(|(mut g, picks)| {
        for p in picks {
            let sites = graph::blowup_sites(&g);
            g = graph::graph_blowup(&g, &sites[p % sites.len()]).unwrap();
        }
        g
    })
}

fn brute_force_wu(g: &PlumbingGraph) -> Vec<Vec<bool>> {
    let m = graph::build_intersection_matrix(g);
    let diag = m.diagonal();
    let n = g.len();
    (0u32..1 << n)
        .map(|mask| (0..n).map(|i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|x| gf2::satisfies_mod2(m.rows(), x, &diag))
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn wu_class_is_the_unique_characteristic_vector(g in homology_sphere_graph()) {
        let hits = brute_force_wu(&g);
        prop_assert_eq!(hits.len(), 1);
        let w: Vec<bool> = wu::wu_class(&g).unwrap().coords.iter().map(|&c| c == 1).collect();
        prop_assert_eq!(&hits[0], &w);
    }

    #[test]
    fn sign_minus_ww_divisible_by_eight(g in homology_sphere_graph()) {
        let m = graph::build_intersection_matrix(&g);
        let f = graph::signature(&m);
        let w = wu::wu_class(&g).unwrap();
        let ww = wu::square(&m, &w.as_bigints());
        let diff = BigInt::from(f.signature()) - ww;
        prop_assert!(diff.is_multiple_of(&BigInt::from(8)));
        let mu = wu::mubar(&g).unwrap();
        prop_assert_eq!(8 * mu.value, mu.sign_term - mu.ww_term);
        prop_assert_eq!(wu::rochlin(&g).unwrap() as i64, mu.value.rem_euclid(2));
    }

    #[test]
    fn mubar_survives_blowups(v in coprime_tuple(3, 30), picks in prop::collection::vec(any::<usize>(), 1..5)) {
        let s = SeifertData::new(v).unwrap();
        let mut g = seifert::canonical_plumbing(&s);
        let base = wu::mubar(&g).unwrap().value;
        for p in picks {
            let sites = graph::blowup_sites(&g);
            g = graph::graph_blowup(&g, &sites[p % sites.len()]).unwrap();
            prop_assert_eq!(wu::mubar(&g).unwrap().value, base);
        }
    }

    /// A negative-definite unimodular form of rank <= 4 is -U^T U for some
    /// unimodular U; a characteristic w then has Uw odd, so w.w <= -rank.
    #[test]
    fn characteristic_square_bounded_by_rank(
        n in 1usize..=4,
        ops in prop::collection::vec((0usize..4, 0usize..4, -2i64..=2), 0..6),
    ) {
        let mut u: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect();
        for (i, j, c) in ops {
            let (i, j) = (i % n, j % n);
            if i != j {
                for k in 0..n {
                    u[i][k] += c * u[j][k];
                }
            }
        }
        let a: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| -(0..n).map(|k| u[k][i] * u[k][j]).sum::<i64>()).collect())
            .collect();
        let diagonalizing = exhaustive_diagonalization(&a, 3);
        prop_assume!(diagonalizing.is_some());
        let diag: Vec<i64> = (0..n).map(|i| a[i][i]).collect();
        let w = gf2::solve_mod2(&a, &diag).unwrap();
        let wv: Vec<i64> = w.iter().map(|&b| i64::from(b)).collect();
        let ww: i64 = (0..n).map(|i| (0..n).map(|j| wv[i] * a[i][j] * wv[j]).sum::<i64>()).sum();
        prop_assert!(ww <= -(n as i64), "w.w = {} for rank {}", ww, n);
        for row in &u {
            let c: i64 = row.iter().zip(&wv).map(|(x, y)| x * y).sum();
            prop_assert!(c % 2 != 0);
        }
    }

    #[test]
    fn canonical_plumbing_is_negative_definite_and_unimodular(v in coprime_tuple(3, 50)) {
        let s = SeifertData::new(v).unwrap();
        let g = seifert::canonical_plumbing(&s);
        let f = graph::signature(&graph::build_intersection_matrix(&g));
        prop_assert!(f.is_negative_definite());
        prop_assert!(f.is_unimodular());
        let (back, orientation) = seifert::seifert_boundary(&g).unwrap();
        prop_assert!(back.same_manifold(&s));
        prop_assert_eq!(orientation, Orientation::Standard);
    }

    #[test]
    fn additivity_over_splice_decomposition(v in coprime_tuple(4, 23)) {
        let s = SeifertData::new(v).unwrap();
        let (l, r) = seifert::splice_decompose(&s, 2).unwrap();
        prop_assert_eq!(
            seifert::mubar_seifert(&s).unwrap(),
            seifert::mubar_seifert(&l).unwrap() + seifert::mubar_seifert(&r).unwrap()
        );
    }

    #[test]
    fn additivity_with_five_fibers(v in coprime_tuple(5, 13), j in 2usize..=3) {
        let s = SeifertData::new(v).unwrap();
        let (l, r) = seifert::splice_decompose(&s, j).unwrap();
        prop_assert_eq!(
            seifert::mubar_seifert(&s).unwrap(),
            seifert::mubar_seifert(&l).unwrap() + seifert::mubar_seifert(&r).unwrap()
        );
    }

    #[test]
    fn two_fiber_surgery_families_vanish(v in coprime_tuple(2, 15), k in 1u64..=5, plus in any::<bool>()) {
        let sign = if plus { SurgerySign::Plus } else { SurgerySign::Minus };
        let s = seifert::surgery_family(&v, k, sign).unwrap();
        prop_assert_eq!(seifert::mubar_seifert(&s).unwrap(), 0);
    }

    #[test]
    fn surgery_relation_signs(v in coprime_tuple(3, 12)) {
        let s = SeifertData::new(v).unwrap();
        let m = seifert::mubar_seifert(&s).unwrap();
        let plus = seifert::surgery_partner(&s, SurgerySign::Plus).unwrap();
        prop_assert_eq!(seifert::mubar_seifert(&plus).unwrap(), m);
        if let Ok(minus) = seifert::surgery_partner(&s, SurgerySign::Minus) {
            prop_assert_eq!(seifert::mubar_seifert(&minus).unwrap(), -m);
        }
    }

    #[test]
    fn normalization_and_order(v in coprime_tuple(3, 30), at in 0usize..4, rot in 0usize..3) {
        let s = SeifertData::new(v.clone()).unwrap();
        let m = seifert::mubar_seifert(&s).unwrap();
        let mut with_one = v.clone();
        with_one.insert(at.min(v.len()), 1);
        prop_assert_eq!(seifert::mubar_seifert(&SeifertData::new(with_one).unwrap()).unwrap(), m);
        let mut rotated = v;
        rotated.rotate_left(rot);
        prop_assert_eq!(seifert::mubar_seifert(&SeifertData::new(rotated).unwrap()).unwrap(), m);
    }

    /// The even plumbing is spin, so its mubar is sign/8 with no Wu term.
    #[test]
    fn even_plumbing_agrees_with_resolution(v in coprime_tuple(3, 30)) {
        let s = SeifertData::new(v).unwrap();
        if let Some(e) = seifert::even_star_plumbing(&s) {
            let m = wu::mubar(&e).unwrap();
            prop_assert_eq!(m.ww_term, 0);
            prop_assert_eq!(m.value, seifert::mubar_seifert(&s).unwrap());
            let (back, _) = seifert::seifert_boundary(&e).unwrap();
            prop_assert!(back.same_manifold(&s));
        }
    }

    #[test]
    fn even_form_round_trip(e8 in -6i64..=6, h in 1u64..=6) {
        let c = gauge::EvenFormClass { e8_count: e8, h_count: h };
        prop_assert_eq!(c.rank(), 8 * e8.unsigned_abs() + 2 * h);
        prop_assert_eq!(gauge::classify_rank_signature(c.rank(), c.signature()).unwrap(), c);
        if e8 != 0 {
            // multiples of E8 + H sit on the 10/8 boundary
            prop_assert_eq!(gauge::ten_eighths_check(c.rank(), c.signature()).unwrap(), h > e8.unsigned_abs());
        }
    }
}

/// Searches vectors with entries in `[-bound, bound]` for a basis of
/// mutually orthogonal `-1` classes with determinant `±1`.
fn exhaustive_diagonalization(a: &[Vec<i64>], bound: i64) -> Option<Vec<Vec<i64>>> {
    let n = a.len();
    let side = (2 * bound + 1) as usize;
    let form = |x: &[i64], y: &[i64]| -> i64 { (0..n).map(|i| (0..n).map(|j| x[i] * a[i][j] * y[j]).sum::<i64>()).sum() };
    let mut units = Vec::new();
    for code in 0..side.pow(n as u32) {
        let v: Vec<i64> = (0..n).map(|i| (code / side.pow(i as u32) % side) as i64 - bound).collect();
        if form(&v, &v) == -1 && v.iter().find(|&&x| x != 0).is_some_and(|&x| x > 0) {
            units.push(v);
        }
    }
    fn extend(units: &[Vec<i64>], chosen: &mut Vec<usize>, n: usize, form: &dyn Fn(&[i64], &[i64]) -> i64) -> bool {
        if chosen.len() == n {
            let m: Vec<Vec<i64>> = chosen.iter().map(|&i| units[i].clone()).collect();
            return homcob::linalg::determinant(&m).magnitude() == &num_bigint::BigUint::from(1u8);
        }
        let start = chosen.last().map_or(0, |&l| l + 1);
        for i in start..units.len() {
            if chosen.iter().all(|&c| form(&units[c], &units[i]) == 0) {
                chosen.push(i);
                if extend(units, chosen, n, form) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    extend(&units, &mut chosen, n, &form).then(|| chosen.iter().map(|&i| units[i].clone()).collect())
}

#[test]
fn diagonalization_search_finds_minus_identity() {
    let a = vec![vec![-2, 1], vec![1, -1]];
    assert!(exhaustive_diagonalization(&a, 2).is_some());
    assert!(exhaustive_diagonalization(&[vec![-2]], 3).is_none());
}

#[test]
fn casson_harer_sphere_has_zero_mubar_and_matching_nu() {
    let s = SeifertData::new(vec![3, 4, 5]).unwrap();
    let m = seifert::mubar_seifert(&s).unwrap();
    assert_eq!(m, 0);
    let f = homcob::floer::ranks_theorem7(3, 1, true).unwrap();
    assert!(homcob::floer::nu_mod2_matches_rochlin(&f, m.rem_euclid(2) as u8).unwrap());
}

#[test]
fn theorem1_examples() {
    let g = seifert::canonical_plumbing(&SeifertData::new(vec![2, 3, 5]).unwrap());
    let v = wu::theorem1_verdict(&g).unwrap();
    assert!(v.applies && v.bounds_ball_excluded);
    let g = seifert::canonical_plumbing(&SeifertData::new(vec![2, 3, 7]).unwrap());
    let v = wu::theorem1_verdict(&g).unwrap();
    assert!(v.applies && !v.bounds_ball_excluded);
    let h = PlumbingGraph::from_weights(&[0, 0], &[(0, 1)]).unwrap();
    assert!(!wu::theorem1_verdict(&h).unwrap().applies);
}
