//! Machine-readable invariant reports.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::floer::{self, FloerRanks};
use crate::gauge::{self, Criterion, EvenFormClass, Fraction, Outcome, Theorem2Result, Verdict};
use crate::graph::{FormSummary, Parity, PlumbingGraph};
use crate::input::{InputKind, InputSpec};
use crate::seifert::{self, Orientation, SeifertData, SpliceTree};
use crate::wu::{self, PlumbingAnalysis};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub input: String,
    pub kind: InputKind,
    pub invariants: Invariants,
    pub verdicts: Vec<Verdict>,
    pub diagnostics: Diagnostics,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Invariants {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mubar: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rochlin: Option<u8>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<i64>,
    /// Casson invariant; a half-integer when computed from arbitrary ranks.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub casson: Option<Fraction>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<Fraction>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormDiagnostics {
    pub rank: usize,
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
    pub signature: i64,
    /// Exact determinant, in decimal.
    pub determinant: String,
    pub parity: Parity,
}

impl From<&FormSummary> for FormDiagnostics {
    fn from(f: &FormSummary) -> Self {
        FormDiagnostics {
            rank: f.rank,
            n_plus: f.n_plus,
            n_minus: f.n_minus,
            n_zero: f.n_zero,
            signature: f.signature(),
            determinant: f.determinant.to_string(),
            parity: f.parity,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpliceNodeDiagnostics {
    pub id: String,
    pub seifert: SeifertData,
    pub mubar: i64,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Diagnostics {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wu_class: Option<Vec<u8>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign_term: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ww_term: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub form: Option<FormDiagnostics>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub even_form: Option<EvenFormClass>,
    /// `sign P - K.K` for the canonical class.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign_minus_kk: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seifert_boundary: Option<(SeifertData, Orientation)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r_residual: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub milnor_signature: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub milnor_rank: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub theorem2: Option<Theorem2Result>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub even_plumbing: Option<gauge::EvenPlumbingSummary>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub splice_nodes: Option<Vec<SpliceNodeDiagnostics>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebraic_link: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub two_periodic: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub four_periodic: Option<bool>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Options {
    pub tolerance: f64,
}

impl Default for Options {
    fn default() -> Self {
        Options { tolerance: gauge::R_TOLERANCE }
    }
}

fn plumbing_diagnostics(a: &PlumbingAnalysis, d: &mut Diagnostics) {
    d.wu_class = Some(a.wu.coords.clone());
    d.sign_term = Some(a.mubar.sign_term);
    d.ww_term = Some(a.mubar.ww_term);
    d.form = Some((&a.form).into());
}

fn seifert_report(s: &SeifertData, opts: &Options) -> Result<(Invariants, Vec<Verdict>, Diagnostics)> {
    let obstruction = gauge::obstruction_report(s, opts.tolerance)?;
    let analysis = wu::analyze(&seifert::canonical_plumbing(s))?;
    let mut d = Diagnostics::default();
    plumbing_diagnostics(&analysis, &mut d);
    d.r_residual = Some(obstruction.r_value.residual);
    d.theorem2 = obstruction.theorem2;
    d.even_plumbing = obstruction.even_plumbing;
    if let Some(c) = obstruction.casson {
        d.milnor_signature = Some(c.milnor_signature);
        d.milnor_rank = Some(c.milnor_rank);
    }
    let inv = Invariants {
        mubar: Some(analysis.mubar.value),
        rochlin: Some(analysis.mubar.rochlin()),
        r: Some(obstruction.r_value.value),
        casson: obstruction.casson.map(|c| Fraction::new(c.lambda, 1)),
        nu: None,
    };
    Ok((inv, obstruction.verdicts, d))
}

fn graph_report(g: &PlumbingGraph) -> Result<(Invariants, Vec<Verdict>, Diagnostics)> {
    let a = wu::analyze(g)?;
    let t1 = wu::theorem1_verdict(g)?;
    let mut d = Diagnostics::default();
    plumbing_diagnostics(&a, &mut d);
    if a.form.parity == Parity::Even && !a.form.is_definite() {
        d.even_form = gauge::even_form_classify(&a.matrix).ok();
    }
    d.sign_minus_kk = gauge::sign_minus_kk(g).ok().map(|x: BigInt| x.to_string());
    d.seifert_boundary = seifert::seifert_boundary(g);
    let verdict = Verdict {
        criterion: Criterion::Theorem1,
        outcome: match (t1.applies, t1.bounds_ball_excluded) {
            (true, true) => Outcome::Obstructed,
            (true, false) => Outcome::Silent,
            (false, _) => Outcome::NotApplicable,
        },
        certificate: t1.certificate(),
    };
    let inv = Invariants { mubar: Some(a.mubar.value), rochlin: Some(a.mubar.rochlin()), ..Default::default() };
    Ok((inv, vec![verdict], d))
}

fn splice_report(t: &SpliceTree) -> Result<(Invariants, Vec<Verdict>, Diagnostics)> {
    let mut nodes = Vec::new();
    for (id, s) in t.nodes() {
        nodes.push(SpliceNodeDiagnostics { id: id.to_string(), seifert: s.clone(), mubar: seifert::mubar_seifert(s)? });
    }
    let mubar: i64 = nodes.iter().map(|n| n.mubar).sum();
    let mut d = Diagnostics::default();

    // Two three-fibered nodes: the splice criterion decides algebraicity.
    let algebraic = match (t.splices(), nodes.as_slice()) {
        ([sp], [x, y]) if x.seifert.len() == 3 && y.seifert.len() == 3 => {
            let orient = |s: &SeifertData, fiber: usize| {
                let v = s.invariants();
                let rest: Vec<u64> = (0..3).filter(|&i| i != fiber).map(|i| v[i]).collect();
                (rest[0], rest[1], v[fiber])
            };
            let (l, r) = if sp.left == 0 {
                (orient(&x.seifert, sp.left_fiber), orient(&y.seifert, sp.right_fiber))
            } else {
                (orient(&x.seifert, sp.right_fiber), orient(&y.seifert, sp.left_fiber))
            };
            Some(seifert::is_algebraic_splice(l, r)?)
        }
        ([], [_]) => Some(true),
        _ => None,
    };
    d.algebraic_link = algebraic;
    d.splice_nodes = Some(nodes);
    let verdict = match algebraic {
        Some(true) => Verdict {
            criterion: Criterion::Theorem1,
            outcome: if mubar < 0 { Outcome::Obstructed } else { Outcome::Silent },
            certificate: if mubar < 0 {
                format!("algebraic link with mubar = {mubar} < 0 by additivity: infinite order")
            } else {
                format!("algebraic link with mubar = {mubar} >= 0: no obstruction")
            },
        },
        Some(false) => Verdict {
            criterion: Criterion::Theorem1,
            outcome: Outcome::NotApplicable,
            certificate: "splice is not an algebraic link".into(),
        },
        None => Verdict {
            criterion: Criterion::Theorem1,
            outcome: Outcome::NotApplicable,
            certificate: "algebraicity is only decided for two three-fibered nodes".into(),
        },
    };
    let inv = Invariants { mubar: Some(mubar), rochlin: Some(mubar.rem_euclid(2) as u8), ..Default::default() };
    Ok((inv, vec![verdict], d))
}

fn ranks_report(f: &FloerRanks) -> (Invariants, Vec<Verdict>, Diagnostics) {
    let nu = floer::nu_from_ranks(f);
    let casson = floer::casson_from_ranks(f);
    let d = Diagnostics {
        two_periodic: Some(floer::is_two_periodic(f)),
        four_periodic: Some(floer::is_four_periodic(f)),
        ..Default::default()
    };
    let inv = Invariants { casson: Some(casson.value()), nu: Some(nu.value()), ..Default::default() };
    (inv, Vec::new(), d)
}

/// Computes every invariant that applies to the input.
pub fn cmd_invariants(input: &InputSpec, echo: &str, opts: &Options) -> Result<Report> {
    let (invariants, verdicts, diagnostics) = match input {
        InputSpec::Seifert(s) => seifert_report(s, opts)?,
        InputSpec::Graph(g) => graph_report(g)?,
        InputSpec::Splice(t) => splice_report(t)?,
        InputSpec::Ranks(f) => ranks_report(f),
    };
    Ok(Report { input: echo.to_string(), kind: input.kind(), invariants, verdicts, diagnostics })
}
