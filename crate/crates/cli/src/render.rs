//! Human-readable output, written to standard error.

use serde_json::Value;

use homcob::checks::CheckSummary;

use crate::commands::{FamilyMember, Measure};

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => None,
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Object(o) if o.len() == 2 && o.contains_key("num") && o.contains_key("den") => {
            let (n, d) = (&o["num"], &o["den"]);
            Some(if d == 1 { n.to_string() } else { format!("{n}/{d}") })
        }
        _ => None,
    }
}

fn fields(v: &Value) -> String {
    let Some(o) = v.as_object() else { return String::new() };
    o.iter().filter_map(|(k, x)| scalar(x).map(|s| format!("{k} = {s}"))).collect::<Vec<_>>().join(", ")
}

fn verdicts(v: &Value) {
    for d in v.as_array().into_iter().flatten() {
        eprintln!(
            "  {:<16} {:<15} {}",
            d["criterion"].as_str().unwrap_or("?"),
            d["outcome"].as_str().unwrap_or("?"),
            d["certificate"].as_str().unwrap_or("")
        );
    }
}

pub fn line(measure: Measure, input: &str, line: Option<usize>, value: Option<&Value>, error: Option<&str>) {
    let head = match line {
        Some(n) => format!("[{n}] {input}"),
        None => input.to_string(),
    };
    if let Some(e) = error {
        eprintln!("{head}: error: {e}");
        return;
    }
    let Some(v) = value else { return };
    match measure {
        Measure::Invariants => {
            eprintln!("{head}");
            eprintln!("  {}", fields(&v["invariants"]));
            verdicts(&v["verdicts"]);
            let diag = fields(&v["diagnostics"]);
            if !diag.is_empty() {
                eprintln!("  {diag}");
            }
            if let Some(w) = v["diagnostics"]["wu_class"].as_array() {
                let bits: String = w.iter().map(|b| b.to_string()).collect();
                eprintln!("  wu class = {bits}");
            }
        }
        Measure::Report => {
            eprintln!("{head}: {}", fields(v));
            verdicts(&v["verdicts"]);
        }
        _ => eprintln!("{head}: {}", fields(v)),
    }
}

pub fn check(s: &CheckSummary) {
    let status = if s.ok() { "PASS" } else { "FAIL" };
    eprintln!("{status} {}: {} passed, {} failed", s.suite, s.passed, s.failed);
    for n in &s.notes {
        eprintln!("  note: {n}");
    }
    for f in &s.failures {
        eprintln!("  failure: {f}");
    }
}

pub fn family(members: &[FamilyMember]) {
    for m in members {
        let mut parts = vec![format!("k = {}", m.k), format!("mubar = {}", m.mubar)];
        if let (Some(l), Some(b)) = (m.casson, m.casson_bound) {
            parts.push(format!("lambda = {l}"));
            if let Some(c) = m.closed_form {
                parts.push(format!("closed form = {c}"));
            }
            parts.push(format!("bound = {b}"));
        }
        if let Some(e) = &m.even_plumbing {
            parts.push(format!("even plumbing rank {} signature {}", e.rank, e.signature));
        }
        if let Some(ok) = m.ten_eighths_admissible {
            parts.push(if ok { "10/8 admissible".into() } else { "10/8 violated".into() });
        }
        eprintln!("{}: {}", m.seifert, parts.join(", "));
    }
}
