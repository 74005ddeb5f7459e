use anyhow::{anyhow, bail, Context, Result};
use clap::{Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

use homcob::floer;
use homcob::gauge::{self, EvenPlumbingSummary, Fraction};
use homcob::input::{self, InputKind, InputSpec};
use homcob::report::{self, Options};
use homcob::seifert::{self, SeifertData, SurgerySign};
use homcob::wu;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Measure {
    Invariants,
    Mubar,
    Rochlin,
    R,
    Casson,
    Nu,
    Report,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SignChoice {
    Plus,
    Minus,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Family {
    /// Σ(a1, .., a_{n-1}, 2ak ± 1) with a = a1 .. a_{n-1}.
    Surgery {
        #[arg(required = true)]
        base: Vec<u64>,
        /// Largest k; members are generated for k = 1..=k-max.
        #[arg(long, default_value_t = 5)]
        k_max: u64,
        #[arg(long, value_enum, default_value_t = SignChoice::Both)]
        sign: SignChoice,
    },
    /// Σ(p, q, pqk + 1) for odd k.
    Theorem3 {
        p: u64,
        q: u64,
        /// Number of members (k = 1, 3, 5, ..).
        #[arg(long, default_value_t = 3)]
        count: u64,
    },
    /// Σ(p, q, 2pqk - 1) with the Casson bound.
    Casson {
        p: u64,
        q: u64,
        #[arg(long, default_value_t = 3)]
        count: u64,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyMember {
    pub seifert: SeifertData,
    pub k: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sign: Option<char>,
    pub mubar: i64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub casson: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub closed_form: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub casson_bound: Option<Fraction>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_violated: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub even_plumbing: Option<EvenPlumbingSummary>,
    /// `false` when the even plumbing form violates 10/8.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ten_eighths_admissible: Option<bool>,
}

impl FamilyMember {
    fn new(seifert: SeifertData, k: u64) -> homcob::Result<Self> {
        let mubar = seifert::mubar_seifert(&seifert)?;
        Ok(FamilyMember {
            seifert,
            k,
            sign: None,
            mubar,
            casson: None,
            closed_form: None,
            casson_bound: None,
            bound_violated: None,
            even_plumbing: None,
            ten_eighths_admissible: None,
        })
    }
}

pub fn family(f: &Family) -> homcob::Result<Vec<FamilyMember>> {
    let mut out = Vec::new();
    match f {
        Family::Surgery { base, k_max, sign } => {
            let signs: &[SurgerySign] = match sign {
                SignChoice::Plus => &[SurgerySign::Plus],
                SignChoice::Minus => &[SurgerySign::Minus],
                SignChoice::Both => &[SurgerySign::Plus, SurgerySign::Minus],
            };
            for k in 1..=*k_max {
                for &sg in signs {
                    let mut m = FamilyMember::new(seifert::surgery_family(base, k, sg)?, k)?;
                    m.sign = Some(if sg == SurgerySign::Plus { '+' } else { '-' });
                    out.push(m);
                }
            }
        }
        Family::Theorem3 { p, q, count } => {
            for i in 0..*count {
                let k = 2 * i + 1;
                let s = SeifertData::new(vec![*p, *q, p * q * k + 1])?;
                let even = gauge::even_plumbing_summary(&s);
                let mut m = FamilyMember::new(s, k)?;
                m.ten_eighths_admissible = match even {
                    Some(e) if e.signature != 0 => Some(gauge::ten_eighths_check(e.rank, e.signature)?),
                    _ => None,
                };
                m.even_plumbing = even;
                out.push(m);
            }
        }
        Family::Casson { p, q, count } => {
            for k in 1..=*count {
                let r = 2 * p * q * k - 1;
                let t2 = gauge::theorem2_test(*p, *q, r)?;
                let mut m = FamilyMember::new(SeifertData::new(vec![*p, *q, r])?, k)?;
                let closed = k as i128 * (*p as i128 * *p as i128 - 1) * (*q as i128 * *q as i128 - 1);
                m.closed_form = (closed % 12 == 0).then(|| (closed / 12) as i64);
                m.casson = Some(t2.lambda);
                m.casson_bound = Some(t2.bound);
                m.bound_violated = Some(t2.violated);
                out.push(m);
            }
        }
    }
    Ok(out)
}

/// Resolves one input line; `graph` and `splice` name a file.
pub fn resolve(text: &str) -> Result<InputSpec> {
    let mut words = text.split_whitespace();
    let head = words.next().unwrap_or("");
    let kind = match head {
        "graph" => InputKind::GraphFile,
        "splice" => InputKind::SpliceFile,
        _ => return Ok(input::parse_inline(text)?),
    };
    let path = words.collect::<Vec<_>>().join(" ");
    if path.is_empty() {
        bail!("`{head}` needs a file path");
    }
    let contents = std::fs::read_to_string(&path).with_context(|| format!("reading {path}"))?;
    input::parse_input(&contents, kind).with_context(|| format!("in {path}"))
}

pub fn evaluate(text: &str, measure: Measure, opts: &Options) -> Result<Value> {
    let spec = resolve(text)?;
    let v = match measure {
        Measure::Invariants => serde_json::to_value(report::cmd_invariants(&spec, text, opts)?)?,
        Measure::Mubar => mubar(&spec)?,
        Measure::Rochlin => {
            let m = mubar(&spec)?;
            let value = m["mubar"].as_i64().ok_or_else(|| anyhow!("mubar missing"))?;
            json!({ "rochlin": value.rem_euclid(2), "mubar": value })
        }
        Measure::R => match &spec {
            InputSpec::Seifert(s) => serde_json::to_value(gauge::r_invariant(s, opts.tolerance)?)?,
            _ => bail!("the R-invariant needs Seifert data"),
        },
        Measure::Casson => match &spec {
            InputSpec::Seifert(s) => {
                let c = s.canonical();
                if c.len() != 3 {
                    bail!("the Casson invariant is only computed for three singular fibers, got {s}");
                }
                let v = c.invariants();
                serde_json::to_value(gauge::casson_brieskorn(v[0], v[1], v[2])?)?
            }
            InputSpec::Ranks(f) => json!({ "casson": floer::casson_from_ranks(f).value() }),
            _ => bail!("the Casson invariant needs a Brieskorn sphere or a rank vector"),
        },
        Measure::Nu => match &spec {
            InputSpec::Ranks(f) => json!({
                "nu": floer::nu_from_ranks(f).value(),
                "two_periodic": floer::is_two_periodic(f),
                "four_periodic": floer::is_four_periodic(f),
            }),
            _ => bail!("nu needs a rank vector"),
        },
        Measure::Report => match &spec {
            InputSpec::Seifert(s) => serde_json::to_value(gauge::obstruction_report(s, opts.tolerance)?)?,
            _ => {
                let r = report::cmd_invariants(&spec, text, opts)?;
                json!({ "verdicts": r.verdicts })
            }
        },
    };
    Ok(v)
}

fn mubar(spec: &InputSpec) -> Result<Value> {
    Ok(match spec {
        InputSpec::Seifert(s) => serde_json::to_value(wu::mubar(&seifert::canonical_plumbing(s))?)?,
        InputSpec::Graph(g) => serde_json::to_value(wu::mubar(g)?)?,
        InputSpec::Splice(t) => json!({ "mubar": seifert::splice_mubar(t)? }),
        InputSpec::Ranks(_) => bail!("mubar needs a plumbing graph, Seifert data or a splice tree"),
    })
    .map(rename_value)
}

/// `MubarValue` serializes its result as `value`; present it as `mubar`.
fn rename_value(mut v: Value) -> Value {
    if let Some(obj) = v.as_object_mut() {
        if let Some(x) = obj.remove("value") {
            obj.insert("mubar".into(), x);
        }
    }
    v
}
