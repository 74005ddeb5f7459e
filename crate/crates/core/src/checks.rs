//! Property suites run by `homcob check <suite>`.
//!
//! Each suite recomputes a family of identities from scratch and tallies
//! passes and failures. Integration tests exercise the same suites, so the
//! command-line tool and `cargo test` share one definition of "correct".

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::floer::{self, FloerRanks, GradingParity};
use crate::gauge;
use crate::graph::{self, BlowupSite, PlumbingGraph};
use crate::seifert::{self, SeifertData, SurgerySign};
use crate::wu;

pub const SUITES: &[&str] = &[
    "mubar-reference-values",
    "negativity",
    "r-reference-values",
    "casson-closed-form",
    "additivity",
    "surgery-vanishing",
    "surgery-relation",
    "signature-identity",
    "even-forms",
    "nu-periodic",
    "wu-uniqueness",
    "blowup",
    "canonical-plumbing",
];

/// How many failure messages a summary keeps.
const MAX_FAILURES: usize = 25;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckSummary {
    pub suite: String,
    pub passed: u64,
    pub failed: u64,
    pub failures: Vec<String>,
    pub notes: Vec<String>,
}

impl CheckSummary {
    fn new(suite: &str) -> Self {
        CheckSummary { suite: suite.to_string(), passed: 0, failed: 0, failures: Vec::new(), notes: Vec::new() }
    }

    pub fn ok(&self) -> bool {
        self.failed == 0
    }

    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.failures.len() < MAX_FAILURES {
                self.failures.push(what());
            }
        }
    }

    fn record_result<T>(&mut self, r: Result<T>, check: impl FnOnce(&T) -> bool, what: impl FnOnce() -> String) {
        match r {
            Ok(v) => {
                let ok = check(&v);
                self.record(ok, what);
            }
            Err(e) => self.record(false, || format!("{}: {e}", what())),
        }
    }
}

pub fn run_suite(name: &str) -> Result<CheckSummary> {
    let mut s = CheckSummary::new(name);
    match name {
        "mubar-reference-values" => mubar_reference_values(&mut s),
        "negativity" => negativity(&mut s, 12),
        "r-reference-values" => r_reference_values(&mut s),
        "casson-closed-form" => casson_closed_form(&mut s),
        "additivity" => additivity(&mut s),
        "surgery-vanishing" => surgery_vanishing(&mut s),
        "surgery-relation" => surgery_relation(&mut s),
        "signature-identity" => signature_identity(&mut s, 3000),
        "even-forms" => even_forms(&mut s),
        "nu-periodic" => nu_periodic(&mut s),
        "wu-uniqueness" => wu_uniqueness(&mut s),
        "blowup" => blowup(&mut s),
        "canonical-plumbing" => canonical_plumbing(&mut s, 50),
        other => return Err(Error::UnknownSuite(other.to_string())),
    }
    Ok(s)
}

fn sd(v: &[u64]) -> SeifertData {
    SeifertData::new(v.to_vec()).expect("valid Seifert data")
}

fn coprime_all(v: &[u64]) -> bool {
    v.iter().enumerate().all(|(i, &a)| v[i + 1..].iter().all(|&b| a.gcd(&b) == 1))
}

/// Pairwise coprime triples `2 <= p < q < r` with `p q r <= max_product`
/// and `r <= max_entry`.
pub fn coprime_triples(max_entry: u64, max_product: u64) -> Vec<(u64, u64, u64)> {
    let mut out = Vec::new();
    for p in 2..=max_entry {
        for q in p + 1..=max_entry {
            if p * q > max_product {
                break;
            }
            for r in q + 1..=max_entry {
                if p * q * r > max_product {
                    break;
                }
                if coprime_all(&[p, q, r]) {
                    out.push((p, q, r));
                }
            }
        }
    }
    out
}

fn mubar_reference_values(s: &mut CheckSummary) {
    for (v, want) in [(&[2u64, 3, 7][..], 1), (&[4, 7, 9], -2), (&[2, 3, 25], 0), (&[2, 11, 19], -1), (&[3, 5, 7], 0)] {
        let data = sd(v);
        s.record_result(seifert::mubar_seifert(&data), |&m| m == want, || format!("mubar({data}) != {want}"));
    }
    let t = seifert::SpliceTree::new(
        vec![("x".into(), sd(&[4, 7, 9])), ("y".into(), sd(&[2, 3, 25]))],
        vec![seifert::Splice { left: 0, left_fiber: 2, right: 1, right_fiber: 2 }],
    )
    .expect("valid splice");
    s.record_result(seifert::splice_mubar(&t), |&m| m == -2, || "splice of Σ(4,7,9) and Σ(2,3,25)".into());
}

fn negativity(s: &mut CheckSummary, max_q: u64) {
    for p in 2..max_q {
        for q in p + 1..=max_q {
            if p.gcd(&q) != 1 {
                continue;
            }
            let data = sd(&[p, q, p * q - 1]);
            s.record_result(seifert::mubar_seifert(&data), |&m| m < 0, || format!("mubar({data}) is not negative"));
        }
    }
}

fn r_reference_values(s: &mut CheckSummary) {
    for (v, want) in [(&[2u64, 11, 19][..], -1), (&[3, 5, 7], 1)] {
        let data = sd(v);
        s.record_result(
            gauge::r_invariant(&data, gauge::R_TOLERANCE),
            |r| r.value == want,
            || format!("R({data}) != {want}"),
        );
    }
    let data = sd(&[2, 3, 13]);
    s.record_result(gauge::r_invariant(&data, gauge::R_TOLERANCE), |r| r.value < 0, || format!("R({data}) >= 0"));
}

fn casson_closed_form(s: &mut CheckSummary) {
    for (p, q) in [(2u64, 3u64), (2, 5), (3, 4), (3, 5)] {
        for k in 1..=3 {
            let r = 2 * p * q * k - 1;
            let want = (k * (p * p - 1) * (q * q - 1) / 12) as i64;
            s.record_result(gauge::casson_brieskorn(p, q, r), |c| c.lambda == want, || {
                format!("lambda(Σ({p},{q},{r})) != {want}")
            });
            s.record_result(seifert::mubar_seifert(&sd(&[p, q, r])), |&m| m == 0, || {
                format!("mubar(Σ({p},{q},{r})) != 0")
            });
        }
    }
}

/// Pairwise coprime quadruples used by the additivity suite.
pub fn additivity_quadruples() -> Vec<[u64; 4]> {
    let mut out = vec![[2, 3, 5, 7]];
    let pool = [2u64, 3, 5, 7, 11, 13, 17, 19, 4, 9, 25, 23];
    for a in 0..pool.len() {
        for b in a + 1..pool.len() {
            for c in b + 1..pool.len() {
                for d in c + 1..pool.len() {
                    let q = [pool[a], pool[b], pool[c], pool[d]];
                    if coprime_all(&q) && q.iter().product::<u64>() <= 20_000 && q != [2, 3, 5, 7] {
                        out.push(q);
                    }
                }
            }
        }
    }
    out
}

fn additivity(s: &mut CheckSummary) {
    let quads = additivity_quadruples();
    for q in &quads {
        let data = sd(q);
        let lhs = seifert::mubar_seifert(&data);
        let rhs = seifert::splice_decompose(&data, 2).and_then(|(l, r)| {
            Ok(seifert::mubar_seifert(&l)? + seifert::mubar_seifert(&r)?)
        });
        let ok = matches!((&lhs, &rhs), (Ok(a), Ok(b)) if a == b);
        s.record(ok, || format!("mubar({data}) = {lhs:?} but the split gives {rhs:?}"));
    }
    s.notes.push(format!("{} quadruples", quads.len()));
}

pub const VANISHING_BASES: &[&[u64]] = &[&[2, 3], &[2, 5], &[3, 4], &[2, 3, 5]];

fn surgery_vanishing(s: &mut CheckSummary) {
    for base in VANISHING_BASES {
        if base.len() >= 3 {
            // Σ(base, 1) is Σ(base) itself, not S³
            if let Ok(m) = seifert::mubar_seifert(&sd(base)) {
                s.notes.push(format!("mubar of the base {} is {m}", sd(base)));
            }
        }
        for k in 1..=5 {
            for sign in [SurgerySign::Plus, SurgerySign::Minus] {
                let member = seifert::surgery_family(base, k, sign);
                let label = format!("{base:?}, k = {k}, {sign:?}");
                match member {
                    Ok(m) => {
                        let v = seifert::mubar_seifert(&m);
                        s.record(matches!(v, Ok(0)), || format!("mubar({m}) = {v:?}, expected 0"));
                    }
                    Err(e) => s.record(false, || format!("{label}: {e}")),
                }
            }
        }
    }
}

/// `mubar(Σ(.., 2a + an)) = mubar(Σ(.., an))` and
/// `mubar(Σ(.., 2a - an)) = -mubar(Σ(.., an))`, including `an = 1`.
fn surgery_relation(s: &mut CheckSummary) {
    let bases: &[&[u64]] = &[&[2, 3], &[2, 5], &[3, 4], &[3, 5], &[2, 7], &[4, 5], &[2, 3, 5], &[2, 3, 7]];
    for base in bases {
        let a: u64 = base.iter().product();
        for an in 1..2 * a {
            let mut v = base.to_vec();
            v.push(an);
            let Ok(data) = SeifertData::new(v) else { continue };
            let m = match seifert::mubar_seifert(&data) {
                Ok(m) => m,
                Err(e) => {
                    s.record(false, || format!("mubar({data}): {e}"));
                    continue;
                }
            };
            for (sign, factor) in [(SurgerySign::Plus, 1), (SurgerySign::Minus, -1)] {
                let Ok(partner) = seifert::surgery_partner(&data, sign) else { continue };
                s.record_result(seifert::mubar_seifert(&partner), |&m2| m2 == factor * m, || {
                    format!("mubar({partner}) != {factor} * mubar({data}) = {}", factor * m)
                });
            }
        }
    }
}

fn signature_identity(s: &mut CheckSummary, max_product: u64) {
    let triples = coprime_triples(max_product, max_product);
    for &(p, q, r) in &triples {
        let g = seifert::canonical_plumbing(&sd(&[p, q, r]));
        let lhs = gauge::sign_minus_kk(&g);
        let rhs = gauge::sign_minus_kk_from_milnor_fiber(p, q, r);
        let ok = matches!((&lhs, &rhs), (Ok(a), Ok(b)) if *a == BigInt::from(*b));
        s.record(ok, || format!("Σ({p},{q},{r}): sign P - K.K = {lhs:?}, Milnor fiber side = {rhs:?}"));
    }
    s.notes.push(format!("{} triples with product <= {max_product}", triples.len()));
}

fn even_forms(s: &mut CheckSummary) {
    s.record_result(gauge::ten_eighths_check(20, 16), |&ok| !ok, || "2E8 + 2H is not prohibited".into());
    s.record_result(gauge::ten_eighths_check(10, 8), |&ok| !ok, || "E8 + H is not prohibited".into());
    s.record_result(gauge::ten_eighths_check(12, 8), |&ok| ok, || "E8 + 2H is prohibited".into());
    let h = gauge::hyperbolic_form();
    s.record_result(
        gauge::even_form_classify(&h),
        |c| *c == gauge::EvenFormClass { e8_count: 0, h_count: 1 },
        || "H does not classify as (0, 1)".into(),
    );
    let e8h = gauge::e8_form().direct_sum(&h);
    s.record_result(
        gauge::even_form_classify(&e8h),
        |c| *c == gauge::EvenFormClass { e8_count: 1, h_count: 1 },
        || "E8 + H does not classify as (1, 1)".into(),
    );
    let g237 = seifert::even_star_plumbing(&sd(&[2, 3, 7]));
    match g237 {
        Some(g) => s.record_result(
            gauge::even_form_classify(&graph::build_intersection_matrix(&g)),
            |c| *c == gauge::EvenFormClass { e8_count: 1, h_count: 1 },
            || "even plumbing of Σ(2,3,7) is not E8 + H".into(),
        ),
        None => s.record(false, || "no even plumbing for Σ(2,3,7)".into()),
    }
    // Σ(2, q, 2qk + 1) with q = 3 mod 4
    for q in [3u64, 7, 11] {
        for k in [1u64, 3] {
            let data = sd(&[2, q, 2 * q * k + 1]);
            let want = gauge::EvenFormClass { e8_count: ((q + 1) / 4) as i64, h_count: 1 };
            let got = gauge::even_plumbing_summary(&data).and_then(|e| e.class);
            s.record(got == Some(want), || format!("even plumbing of {data}: {got:?}, expected {want:?}"));
        }
    }
    for e8 in -4i64..=4 {
        for h in 1u64..=4 {
            let c = gauge::EvenFormClass { e8_count: e8, h_count: h };
            s.record_result(gauge::classify_rank_signature(c.rank(), c.signature()), |&back| back == c, || {
                format!("{c:?} does not round-trip")
            });
        }
    }
}

fn nu_periodic(s: &mut CheckSummary) {
    for r0 in 0..16u64 {
        for r1 in 0..16u64 {
            let f = FloerRanks::new([r0, r1, r0, r1, r0, r1, r0, r1]);
            s.record(floer::nu_from_ranks(&f).numerator == 0, || format!("nu{:?} != 0", f.ranks));
        }
    }
    let mut gens = vec![floer::ranks_theorem6(GradingParity::Even), floer::ranks_theorem6(GradingParity::Odd)];
    for p in [3u64, 5, 7, 9] {
        for sgn in 1..=4u64 {
            for plus in [true, false] {
                if let Ok(f) = floer::ranks_theorem7(p, sgn, plus) {
                    gens.push(f);
                }
            }
        }
    }
    for (p, q) in [(2u64, 3u64), (2, 5), (3, 4), (3, 5), (2, 7)] {
        for n in 1..=3 {
            if let Ok(f) = floer::ranks_theorem8(p, q, n) {
                gens.push(f);
            }
        }
    }
    for f in &gens {
        s.record(floer::nu_from_ranks(f).numerator == 0, || format!("generator output {:?} has nu != 0", f.ranks));
    }
    let lambda = gauge::casson_brieskorn(2, 3, 11).map(|c| c.lambda);
    let from_ranks = floer::ranks_theorem8(2, 3, 1).map(|f| floer::casson_from_ranks(&f).as_integer());
    s.record(matches!((lambda, from_ranks), (Ok(2), Ok(Some(2)))), || {
        "Periodic family ranks at (2,3,1) disagree with lambda(Σ(2,3,11))".into()
    });
}

/// Homology-sphere plumbings with at most 12 vertices.
pub fn test_corpus() -> Vec<(String, PlumbingGraph)> {
    let mut out: Vec<(String, PlumbingGraph)> = Vec::new();
    out.push(("E8(-2)".into(), graph::e8_graph(-2)));
    out.push(("E8(+2)".into(), graph::e8_graph(2)));
    for w in [-1, 1] {
        out.push((format!("point({w})"), PlumbingGraph::from_weights(&[w], &[]).expect("valid")));
    }
    for (a, b) in [(0, 0), (0, 1), (0, -3), (2, 0)] {
        out.push((format!("pair({a},{b})"), PlumbingGraph::from_weights(&[a, b], &[(0, 1)]).expect("valid")));
    }
    out.push((
        "E8 + point(-1)".into(),
        PlumbingGraph::from_weights(
            &[-2, -2, -2, -2, -2, -2, -2, -2, -1],
            &[(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7)],
        )
        .expect("valid"),
    ));
    for (p, q, r) in coprime_triples(40, 2000) {
        let data = sd(&[p, q, r]);
        let g = seifert::canonical_plumbing(&data);
        if g.len() <= 12 {
            out.push((format!("canonical {data}"), g));
        }
        if let Some(e) = seifert::even_star_plumbing(&data) {
            if e.len() <= 12 {
                out.push((format!("even {data}"), e));
            }
        }
    }
    let mut chains = 0;
    'outer: for len in 2..=4usize {
        let edges: Vec<(usize, usize)> = (1..len).map(|i| (i - 1, i)).collect();
        let total = 7usize.pow(len as u32);
        for code in 0..total {
            let weights: Vec<i64> = (0..len).map(|i| (code / 7usize.pow(i as u32) % 7) as i64 - 3).collect();
            let g = PlumbingGraph::from_weights(&weights, &edges).expect("chain");
            if graph::is_homology_sphere(&g) && code % 3 == 0 {
                out.push((format!("chain{weights:?}"), g));
                chains += 1;
                if chains >= 40 {
                    break 'outer;
                }
            }
        }
    }
    out
}

fn wu_uniqueness(s: &mut CheckSummary) {
    let corpus = test_corpus();
    for (name, g) in &corpus {
        let m = graph::build_intersection_matrix(g);
        let diag = m.diagonal();
        let n = g.len();
        let mut hits = Vec::new();
        for mask in 0u32..(1 << n) {
            let x: Vec<bool> = (0..n).map(|i| mask >> i & 1 == 1).collect();
            if crate::gf2::satisfies_mod2(m.rows(), &x, &diag) {
                hits.push(x);
            }
        }
        let solver = wu::wu_class(g).map(|w| w.coords.iter().map(|&c| c == 1).collect::<Vec<bool>>());
        let ok = hits.len() == 1 && solver.as_ref().ok() == hits.first();
        s.record(ok, || format!("{name}: {} brute-force solutions, solver {solver:?}", hits.len()));
    }
    s.notes.push(format!("{} corpus graphs", corpus.len()));
}

fn blowup(s: &mut CheckSummary) {
    for (name, g) in test_corpus() {
        let base = match wu::mubar(&g) {
            Ok(m) => m.value,
            Err(e) => {
                s.record(false, || format!("{name}: {e}"));
                continue;
            }
        };
        let before = graph::signature(&graph::build_intersection_matrix(&g));
        for site in graph::blowup_sites(&g) {
            let label = match &site {
                BlowupSite::Vertex(v) => format!("{name} at vertex {v}"),
                BlowupSite::Edge(a, b) => format!("{name} on edge {a}-{b}"),
            };
            let b = match graph::graph_blowup(&g, &site) {
                Ok(b) => b,
                Err(e) => {
                    s.record(false, || format!("{label}: {e}"));
                    continue;
                }
            };
            let after = graph::signature(&graph::build_intersection_matrix(&b));
            let form_ok = after.determinant.magnitude() == before.determinant.magnitude()
                && after.signature() == before.signature() - 1;
            s.record_result(wu::mubar(&b), |m| form_ok && m.value == base, || format!("{label}: invariants changed"));
        }
    }
}

fn canonical_plumbing(s: &mut CheckSummary, max_entry: u64) {
    for (p, q, r) in coprime_triples(max_entry, u64::MAX) {
        let g = seifert::canonical_plumbing(&sd(&[p, q, r]));
        let f = graph::signature(&graph::build_intersection_matrix(&g));
        s.record(f.is_negative_definite() && f.is_unimodular(), || format!("canonical plumbing of Σ({p},{q},{r})"));
    }
}
