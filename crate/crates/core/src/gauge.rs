//! Gauge-theoretic obstructions for Seifert fibered homology spheres.
//!
//! Contents: the Fintushel–Stern `R`-invariant, the Casson invariant of a
//! Brieskorn sphere via the Milnor fiber signature, the Casson bound for
//! spheres homology cobordant to zero, the canonical class of a resolution,
//! even-form (E8/H) bookkeeping with the 10/8 inequality, and a combined
//! obstruction report.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{self, IntersectionMatrix, Parity, PlumbingGraph};
use crate::linalg;
use crate::seifert::{self, SeifertData};
use crate::wu;

/// Default bound on `|R - round(R)|`.
pub const R_TOLERANCE: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RValue {
    pub value: i64,
    /// Distance from the floating-point sum to `value`.
    pub residual: f64,
}

/// Floating-point evaluation of the `R` trigonometric sum, before rounding.
pub fn r_invariant_raw(s: &SeifertData) -> f64 {
    let c = s.canonical();
    let a = c.product();
    let n = c.len() as f64;
    let mut total = 2.0 / a as f64 - 3.0 + n;
    for &ai in c.invariants() {
        let ai128 = ai as u128;
        // cot has period π, so reduce a k / ai^2 = (a/ai) k / ai mod 1 exactly
        let unit = (a / ai128) % ai128;
        let aif = ai as f64;
        let mut inner = 0.0;
        for k in 1..ai128 {
            let m = (unit * k) % ai128;
            let x = PI * k as f64 / aif;
            let y = PI * m as f64 / aif;
            let (sx, cx) = x.sin_cos();
            // cot(x) sin^2(x) = sin(x) cos(x)
            inner += y.cos() / y.sin() * sx * cx;
        }
        total += 2.0 / aif * inner;
    }
    total
}

pub fn r_invariant(s: &SeifertData, tolerance: f64) -> Result<RValue> {
    let raw = r_invariant_raw(s);
    let rounded = raw.round();
    let residual = (raw - rounded).abs();
    if residual >= tolerance || !rounded.is_finite() {
        return Err(Error::RoundingUnstable { value: raw, residual, tolerance });
    }
    Ok(RValue { value: rounded as i64, residual })
}

/// `true` when `R >= 0`, which rules out bounding a homology ball.
pub fn r_test(s: &SeifertData, tolerance: f64) -> Result<bool> {
    Ok(r_invariant(s, tolerance)?.value >= 0)
}

fn triple(p: u64, q: u64, r: u64) -> Result<SeifertData> {
    SeifertData::new(vec![p, q, r])
}

/// Signature of the Milnor fiber of `z1^p + z2^q + z3^r`, by Brieskorn's
/// lattice count: `σ+ - σ-` where `σ+` (resp. `σ-`) counts `0 < xi < ai`
/// with `Σ xi/ai mod 2` in `(0, 1)` (resp. `(1, 2)`).
pub fn milnor_fiber_signature(p: u64, q: u64, r: u64) -> Result<i64> {
    triple(p, q, r)?;
    let (p, q, r) = (p as u128, q as u128, r as u128);
    let n = p * q * r;
    let (wx, wy, wz) = (q * r, p * r, p * q);
    let mut sig = 0i64;
    for x in 1..p {
        for y in 1..q {
            let base = x * wx + y * wy;
            for z in 1..r {
                let t = (base + z * wz) % (2 * n);
                // pairwise coprime: Σ xi/ai is never an integer
                debug_assert!(t != 0 && t != n);
                if t < n {
                    sig += 1;
                } else {
                    sig -= 1;
                }
            }
        }
    }
    Ok(sig)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CassonValue {
    pub lambda: i64,
    pub milnor_signature: i64,
    pub milnor_rank: u64,
}

/// Casson invariant of `Σ(p, q, r)` from `sign M = -8 λ`.
pub fn casson_brieskorn(p: u64, q: u64, r: u64) -> Result<CassonValue> {
    let sig = milnor_fiber_signature(p, q, r)?;
    if sig % 8 != 0 {
        return Err(Error::NonDivisibleBy8 { what: "Milnor fiber signature", value: sig.to_string() });
    }
    Ok(CassonValue { lambda: -sig / 8, milnor_signature: sig, milnor_rank: (p - 1) * (q - 1) * (r - 1) })
}

/// Exact fraction `num/den` with `den > 0` in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fraction {
    pub num: i64,
    pub den: i64,
}

impl Fraction {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0);
        let g = num.gcd(&den) * den.signum();
        Fraction { num: num / g, den: den / g }
    }

    /// `self < x` for an integer `x`.
    pub fn lt_int(&self, x: i64) -> bool {
        (self.num as i128) < x as i128 * self.den as i128
    }
}

impl std::fmt::Display for Fraction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem2Result {
    /// `∏(ai - 1) / 12`
    pub bound: Fraction,
    pub lambda: i64,
    /// `λ > bound`: `Σ` is not homology cobordant to zero.
    pub violated: bool,
    /// The same test for `-Σ`, whose Casson invariant is `-λ`.
    pub reversed_violated: bool,
    /// `(p, q, k)` when `Σ = Σ(p, q, 2pqk - 1)`.
    pub family: Option<(u64, u64, u64)>,
    /// Member of the `2pqk - 1` family that the bound does not detect.
    pub family_undetected: bool,
}

fn family_2pqk_minus_1(s: &SeifertData) -> Option<(u64, u64, u64)> {
    let c = s.canonical();
    if c.len() != 3 {
        return None;
    }
    let v = c.invariants();
    [(0, 1, 2), (0, 2, 1), (1, 2, 0)].into_iter().find_map(|(i, j, l)| {
        let (p, q, r) = (v[i], v[j], v[l]);
        let m = 2 * p * q;
        ((r + 1) % m == 0).then_some((p, q, (r + 1) / m))
    })
}

pub fn theorem2_test(p: u64, q: u64, r: u64) -> Result<Theorem2Result> {
    let s = triple(p, q, r)?;
    let c = casson_brieskorn(p, q, r)?;
    let bound = Fraction::new(c.milnor_rank as i64, 12);
    let violated = bound.lt_int(c.lambda);
    let family = family_2pqk_minus_1(&s);
    Ok(Theorem2Result {
        bound,
        lambda: c.lambda,
        violated,
        reversed_violated: bound.lt_int(-c.lambda),
        family,
        family_undetected: family.is_some() && !violated,
    })
}

fn unimodular(m: &IntersectionMatrix) -> Result<()> {
    let det = graph::determinant(m);
    if det.abs().is_one() {
        Ok(())
    } else {
        Err(Error::NotHomologySphere { det: det.to_string() })
    }
}

/// The characteristic vector `K` solving the adjunction system
/// `K . ei = -ei.ei - 2`, i.e. `A K = d` with `di = -aii - 2`.
pub fn canonical_class(g: &PlumbingGraph) -> Result<Vec<BigInt>> {
    let m = graph::build_intersection_matrix(g);
    unimodular(&m)?;
    let d: Vec<i64> = m.diagonal().iter().map(|&e| -e - 2).collect();
    let x = linalg::solve_rational(m.rows(), &d)
        .ok_or_else(|| Error::SolveFailure("adjunction system is singular".into()))?;
    let k: Vec<BigInt> = x
        .into_iter()
        .map(|v| {
            if v.is_integer() {
                Ok(v.to_integer())
            } else {
                Err(Error::SolveFailure(format!("non-integral canonical class coordinate {v}")))
            }
        })
        .collect::<Result<_>>()?;
    let as_i64: Option<Vec<bool>> = k.iter().map(|c| c.to_i64().map(|c| c.rem_euclid(2) == 1)).collect();
    let diag = m.diagonal();
    let characteristic = match as_i64 {
        Some(bits) => crate::gf2::satisfies_mod2(m.rows(), &bits, &diag),
        None => {
            let two = BigInt::from(2);
            let bits: Vec<bool> = k.iter().map(|c| c.mod_floor(&two).is_one()).collect();
            crate::gf2::satisfies_mod2(m.rows(), &bits, &diag)
        }
    };
    if !characteristic {
        return Err(Error::SolveFailure("canonical class is not characteristic".into()));
    }
    Ok(k)
}

/// `sign P - K.K` for the canonical class of the plumbing.
pub fn sign_minus_kk(g: &PlumbingGraph) -> Result<BigInt> {
    let k = canonical_class(g)?;
    let m = graph::build_intersection_matrix(g);
    let kk = linalg::bilinear(m.rows(), &k, &k);
    let sig = linalg::inertia(m.rows()).signature();
    Ok(BigInt::from(sig) - kk)
}

/// The same quantity computed from the Milnor fiber:
/// `3 sign M + 2 e(M) - 2 = -24 λ + 2 ∏(ai - 1)`.
pub fn sign_minus_kk_from_milnor_fiber(p: u64, q: u64, r: u64) -> Result<i64> {
    let c = casson_brieskorn(p, q, r)?;
    Ok(3 * c.milnor_signature + 2 * (1 + c.milnor_rank as i64) - 2)
}

/// Whether an even form of this rank and signature can occur on a closed
/// smooth spin 4-manifold, i.e. `8 rank > 10 |sign|`.
pub fn ten_eighths_check(rank: u64, sign: i64) -> Result<bool> {
    if sign == 0 {
        return Err(Error::ZeroSignature);
    }
    Ok(8 * rank as i128 > 10 * sign.unsigned_abs() as i128)
}

/// `e8_count * E8 ⊕ h_count * H`; `e8_count` carries the sign of the
/// definite part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct EvenFormClass {
    pub e8_count: i64,
    pub h_count: u64,
}

impl EvenFormClass {
    pub fn rank(&self) -> u64 {
        8 * self.e8_count.unsigned_abs() + 2 * self.h_count
    }

    pub fn signature(&self) -> i64 {
        8 * self.e8_count
    }
}

/// Classifies an even unimodular indefinite form by rank and signature.
pub fn even_form_classify(m: &IntersectionMatrix) -> Result<EvenFormClass> {
    let f = graph::signature(m);
    if f.parity != Parity::Even {
        return Err(Error::NotEven);
    }
    if !f.is_unimodular() {
        return Err(Error::NotUnimodular(f.determinant.to_string()));
    }
    if f.is_definite() {
        return Err(Error::Definite);
    }
    classify_rank_signature(f.rank as u64, f.signature())
}

/// Rank/signature arithmetic behind [`even_form_classify`].
pub fn classify_rank_signature(rank: u64, sign: i64) -> Result<EvenFormClass> {
    if sign % 8 != 0 {
        return Err(Error::NonDivisibleBy8 { what: "signature", value: sign.to_string() });
    }
    let e8 = sign / 8;
    let rest = rank as i64 - 8 * e8.abs();
    if rest < 0 || rest % 2 != 0 {
        return Err(Error::Definite);
    }
    Ok(EvenFormClass { e8_count: e8, h_count: (rest / 2) as u64 })
}

/// The positive-definite `E8` form.
pub fn e8_form() -> IntersectionMatrix {
    graph::build_intersection_matrix(&graph::e8_graph(2))
}

/// The hyperbolic plane `[[0, 1], [1, 0]]`.
pub fn hyperbolic_form() -> IntersectionMatrix {
    IntersectionMatrix::from_rows(vec![vec![0, 1], vec![1, 0]]).expect("symmetric")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Criterion {
    /// Negative-definite plumbing with `mubar < 0`.
    Theorem1,
    /// Fintushel–Stern `R >= 0`.
    RTest,
    /// Casson invariant above `∏(ai - 1)/12`.
    Theorem2,
    /// Even plumbing whose multiples violate 10/8.
    TenEighths,
    /// `Σ(p, q, pqk + 1)` with `k` odd.
    Theorem3Family,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    /// The criterion certifies that `Σ` is not homology cobordant to zero
    /// (or, for the 10/8 and family criteria, that no multiple bounds a
    /// contractible manifold).
    Obstructed,
    Silent,
    NotApplicable,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub criterion: Criterion,
    pub outcome: Outcome,
    pub certificate: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub seifert: SeifertData,
    pub mubar: i64,
    pub r_value: RValue,
    pub casson: Option<CassonValue>,
    pub theorem2: Option<Theorem2Result>,
    pub even_plumbing: Option<EvenPlumbingSummary>,
    pub verdicts: Vec<Verdict>,
}

impl ObstructionReport {
    pub fn verdict(&self, c: Criterion) -> Option<&Verdict> {
        self.verdicts.iter().find(|v| v.criterion == c)
    }

    pub fn obstructed(&self) -> bool {
        self.verdicts.iter().any(|v| v.outcome == Outcome::Obstructed)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct EvenPlumbingSummary {
    pub rank: u64,
    pub signature: i64,
    pub class: Option<EvenFormClass>,
}

pub fn even_plumbing_summary(s: &SeifertData) -> Option<EvenPlumbingSummary> {
    let g = seifert::even_star_plumbing(s)?;
    let m = graph::build_intersection_matrix(&g);
    let f = graph::signature(&m);
    debug_assert_eq!(f.parity, Parity::Even);
    debug_assert!(f.is_unimodular());
    let class = even_form_classify(&m).ok();
    Some(EvenPlumbingSummary { rank: f.rank as u64, signature: f.signature(), class })
}

pub fn obstruction_report(s: &SeifertData, tolerance: f64) -> Result<ObstructionReport> {
    let plumbing = seifert::canonical_plumbing(s);
    let t1 = wu::theorem1_verdict(&plumbing)?;
    let r = r_invariant(s, tolerance)?;
    let mut verdicts = Vec::new();

    verdicts.push(Verdict {
        criterion: Criterion::Theorem1,
        outcome: match (t1.applies, t1.bounds_ball_excluded) {
            (true, true) => Outcome::Obstructed,
            (true, false) => Outcome::Silent,
            (false, _) => Outcome::NotApplicable,
        },
        certificate: t1.certificate(),
    });

    let fires = r.value >= 0;
    verdicts.push(Verdict {
        criterion: Criterion::RTest,
        outcome: if fires { Outcome::Obstructed } else { Outcome::Silent },
        certificate: format!(
            "R = {} (residual {:.1e}){}",
            r.value,
            r.residual,
            if fires { " >= 0: does not bound a homology ball" } else { " < 0: no obstruction" }
        ),
    });

    let c = s.canonical();
    let (casson, theorem2) = if c.len() == 3 {
        let v = c.invariants();
        let cas = casson_brieskorn(v[0], v[1], v[2])?;
        let t2 = theorem2_test(v[0], v[1], v[2])?;
        let mut cert = format!(
            "lambda = {} {} prod(ai - 1)/12 = {}",
            t2.lambda,
            if t2.violated { ">" } else { "<=" },
            t2.bound
        );
        if let Some((p, q, k)) = t2.family {
            cert.push_str(&format!("; member of the 2pqk-1 family with (p, q, k) = ({p}, {q}, {k})"));
            if t2.family_undetected {
                cert.push_str(", but the bound does not detect it");
            }
        }
        verdicts.push(Verdict {
            criterion: Criterion::Theorem2,
            outcome: if t2.violated { Outcome::Obstructed } else { Outcome::Silent },
            certificate: cert,
        });
        (Some(cas), Some(t2))
    } else {
        verdicts.push(Verdict {
            criterion: Criterion::Theorem2,
            outcome: Outcome::NotApplicable,
            certificate: "Casson invariant is only computed for three singular fibers".into(),
        });
        (None, None)
    };

    let even = even_plumbing_summary(s);
    let ten_eighths = match even {
        Some(e) if e.signature != 0 => {
            let admissible = ten_eighths_check(e.rank, e.signature)?;
            let form = match e.class {
                Some(cl) => format!("{} E8 + {} H", cl.e8_count, cl.h_count),
                None => format!("definite even form of rank {}", e.rank),
            };
            Verdict {
                criterion: Criterion::TenEighths,
                outcome: if admissible { Outcome::Silent } else { Outcome::Obstructed },
                certificate: format!(
                    "even plumbing with form {form} (rank {}, signature {}): {}",
                    e.rank,
                    e.signature,
                    if admissible {
                        "rank/|sign| > 10/8, no obstruction"
                    } else {
                        "rank/|sign| <= 10/8, so no multiple bounds a contractible 4-manifold"
                    }
                ),
            }
        }
        Some(_) => Verdict {
            criterion: Criterion::TenEighths,
            outcome: Outcome::NotApplicable,
            certificate: "even plumbing has signature 0".into(),
        },
        None => Verdict {
            criterion: Criterion::TenEighths,
            outcome: Outcome::NotApplicable,
            certificate: "no even star-shaped plumbing with this fibration".into(),
        },
    };
    verdicts.push(ten_eighths);

    verdicts.push(match seifert::theorem3_family(s) {
        Some((p, q, k)) => Verdict {
            criterion: Criterion::Theorem3Family,
            outcome: Outcome::Obstructed,
            certificate: format!(
                "Σ({p},{q},{p}*{q}*{k}+1) with k = {k} odd: no multiple bounds a smooth contractible 4-manifold"
            ),
        },
        None => Verdict {
            criterion: Criterion::Theorem3Family,
            outcome: Outcome::NotApplicable,
            certificate: "not of the form Σ(p,q,pqk+1) with k odd".into(),
        },
    });

    Ok(ObstructionReport {
        seifert: s.clone(),
        mubar: t1.mubar,
        r_value: r,
        casson,
        theorem2,
        even_plumbing: even,
        verdicts,
    })
}
