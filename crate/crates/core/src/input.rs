//! Line-oriented text formats.
//!
//! ```text
//! # plumbing graph
//! v a -2
//! v b -3
//! e a b
//!
//! # splice diagram; fiber positions are 1-based
//! node x 4 7 9
//! node y 2 3 25
//! splice x:3 y:3
//!
//! seifert 2 3 7
//! ranks 1 0 1 0 1 0 1 0
//! ```
//!
//! `#` starts a comment anywhere on a line.

use std::collections::HashMap;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::floer::FloerRanks;
use crate::graph::{PlumbingGraph, Vertex};
use crate::seifert::{SeifertData, Splice, SpliceTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum InputKind {
    GraphFile,
    SeifertInline,
    SpliceFile,
    RanksInline,
}

#[derive(Debug, Clone, PartialEq)]
pub enum InputSpec {
    Graph(PlumbingGraph),
    Seifert(SeifertData),
    Splice(SpliceTree),
    Ranks(FloerRanks),
}

impl InputSpec {
    pub fn kind(&self) -> InputKind {
        match self {
            InputSpec::Graph(_) => InputKind::GraphFile,
            InputSpec::Seifert(_) => InputKind::SeifertInline,
            InputSpec::Splice(_) => InputKind::SpliceFile,
            InputSpec::Ranks(_) => InputKind::RanksInline,
        }
    }
}

pub fn parse_input(text: &str, kind: InputKind) -> Result<InputSpec> {
    Ok(match kind {
        InputKind::GraphFile => InputSpec::Graph(parse_graph(text)?),
        InputKind::SeifertInline => InputSpec::Seifert(parse_seifert(text)?),
        InputKind::SpliceFile => InputSpec::Splice(parse_splice(text)?),
        InputKind::RanksInline => InputSpec::Ranks(parse_ranks(text)?),
    })
}

#[derive(Debug, Clone, Copy)]
struct Token<'a> {
    text: &'a str,
    line: usize,
    column: usize,
}

impl<'a> Token<'a> {
    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { line: self.line, column: self.column, message: message.into() }
    }

    fn parse<T: FromStr>(&self, what: &str) -> Result<T> {
        self.text
            .parse()
            .map_err(|_| self.error(format!("expected {what}, found `{}`", self.text)))
    }
}

/// Non-empty, comment-stripped lines split into tokens with 1-based
/// positions.
fn tokenize(text: &str) -> Vec<Vec<Token<'_>>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut toks = Vec::new();
        let mut start = None;
        for (pos, ch) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
            match (ch.is_whitespace(), start) {
                (false, None) => start = Some(pos),
                (true, Some(s)) => {
                    let column = line[..s].chars().count() + 1;
                    toks.push(Token { text: &line[s..pos], line: i + 1, column });
                    start = None;
                }
                _ => {}
            }
        }
        if !toks.is_empty() {
            out.push(toks);
        }
    }
    out
}

fn arity(toks: &[Token<'_>], n: usize) -> Result<()> {
    if toks.len() != n {
        let t = toks.get(n).unwrap_or(&toks[0]);
        return Err(t.error(format!("`{}` takes {} arguments, found {}", toks[0].text, n - 1, toks.len() - 1)));
    }
    Ok(())
}

pub fn parse_graph(text: &str) -> Result<PlumbingGraph> {
    let mut vertices = Vec::new();
    let mut seen: HashMap<&str, ()> = HashMap::new();
    let mut edges: Vec<(Token<'_>, Token<'_>)> = Vec::new();
    for toks in tokenize(text) {
        match toks[0].text {
            "v" => {
                arity(&toks, 3)?;
                if seen.insert(toks[1].text, ()).is_some() {
                    return Err(toks[1].error(format!("duplicate vertex id `{}`", toks[1].text)));
                }
                vertices.push(Vertex { id: toks[1].text.to_string(), weight: toks[2].parse("an integer weight")? });
            }
            "e" => {
                arity(&toks, 3)?;
                edges.push((toks[1], toks[2]));
            }
            other => return Err(toks[0].error(format!("unknown record `{other}`, expected `v` or `e`"))),
        }
    }
    for &(a, b) in &edges {
        for t in [a, b] {
            if !seen.contains_key(t.text) {
                return Err(t.error(format!("edge references unknown vertex `{}`", t.text)));
            }
        }
        if a.text == b.text {
            return Err(a.error(format!("self-loop at `{}`", a.text)));
        }
    }
    let pairs: Vec<(String, String)> = edges.iter().map(|(a, b)| (a.text.to_string(), b.text.to_string())).collect();
    PlumbingGraph::new(vertices, &pairs)
}

fn single_record<'a>(text: &'a str, keyword: &str) -> Result<Vec<Token<'a>>> {
    let lines = tokenize(text);
    match lines.as_slice() {
        [] => Err(Error::Parse { line: 1, column: 1, message: format!("expected `{keyword} ...`") }),
        [toks] if toks[0].text == keyword => Ok(toks.clone()),
        [toks] => Err(toks[0].error(format!("expected `{keyword}`, found `{}`", toks[0].text))),
        [_, second, ..] => Err(second[0].error(format!("expected a single `{keyword}` record"))),
    }
}

pub fn parse_seifert(text: &str) -> Result<SeifertData> {
    let toks = single_record(text, "seifert")?;
    let inv = toks[1..].iter().map(|t| t.parse::<u64>("a positive integer")).collect::<Result<Vec<_>>>()?;
    SeifertData::new(inv)
}

pub fn parse_ranks(text: &str) -> Result<FloerRanks> {
    let toks = single_record(text, "ranks")?;
    arity(&toks, 9)?;
    let mut ranks = [0u64; 8];
    for (slot, t) in ranks.iter_mut().zip(&toks[1..]) {
        *slot = t.parse("a nonnegative integer rank")?;
    }
    Ok(FloerRanks::new(ranks))
}

pub fn parse_splice(text: &str) -> Result<SpliceTree> {
    let mut nodes: Vec<(String, SeifertData)> = Vec::new();
    let mut splice_toks: Vec<(Token<'_>, Token<'_>)> = Vec::new();
    for toks in tokenize(text) {
        match toks[0].text {
            "node" => {
                if toks.len() < 2 {
                    return Err(toks[0].error("`node` needs an id"));
                }
                let inv = toks[2..].iter().map(|t| t.parse::<u64>("a positive integer")).collect::<Result<Vec<_>>>()?;
                nodes.push((toks[1].text.to_string(), SeifertData::new(inv)?));
            }
            "splice" => {
                arity(&toks, 3)?;
                splice_toks.push((toks[1], toks[2]));
            }
            other => return Err(toks[0].error(format!("unknown record `{other}`, expected `node` or `splice`"))),
        }
    }
    let index: HashMap<&str, usize> = nodes.iter().enumerate().map(|(i, (id, _))| (id.as_str(), i)).collect();
    let endpoint = |t: Token<'_>| -> Result<(usize, usize)> {
        let (id, pos) = t.text.split_once(':').ok_or_else(|| t.error("expected `<id>:<fiber-position>`"))?;
        let node = *index.get(id).ok_or_else(|| t.error(format!("unknown node `{id}`")))?;
        let pos: usize = pos.parse().map_err(|_| t.error(format!("bad fiber position `{pos}`")))?;
        if pos == 0 || pos > nodes[node].1.len() {
            return Err(t.error(format!("node `{id}` has no fiber #{pos}")));
        }
        Ok((node, pos - 1))
    };
    let mut splices = Vec::new();
    for (a, b) in splice_toks {
        let (left, left_fiber) = endpoint(a)?;
        let (right, right_fiber) = endpoint(b)?;
        splices.push(Splice { left, left_fiber, right, right_fiber });
    }
    SpliceTree::new(nodes, splices)
}

/// Parses a one-line inline input (`seifert ...` or `ranks ...`).
pub fn parse_inline(line: &str) -> Result<InputSpec> {
    let first = line.split_whitespace().next().unwrap_or("");
    match first {
        "seifert" => parse_input(line, InputKind::SeifertInline),
        "ranks" => parse_input(line, InputKind::RanksInline),
        _ => Err(Error::Parse {
            line: 1,
            column: 1,
            message: format!("expected `seifert` or `ranks`, found `{first}`"),
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_intersection_matrix;

    #[test]
    fn seifert_inline() {
        assert_eq!(parse_seifert("seifert 2 3 7").unwrap(), SeifertData::new(vec![2, 3, 7]).unwrap());
        match parse_seifert("seifert 2 4 7") {
            Err(Error::InvalidSeifertData { reason, .. }) => assert!(reason.contains("2 and 4")),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(
            parse_seifert("seifert 2 x 7"),
            Err(Error::Parse { line: 1, column: 11, message: "expected a positive integer, found `x`".into() })
        );
    }

    #[test]
    fn graph_file() {
        let g = parse_graph("# two spheres\nv a -2\nv b -3  # comment\n\ne a b\n").unwrap();
        assert_eq!(g.len(), 2);
        assert_eq!(build_intersection_matrix(&g).rows(), &[vec![-2, 1], vec![1, -3]]);
    }

    #[test]
    fn graph_errors_carry_positions() {
        let e = parse_graph("v a -2\ne a zz\n").unwrap_err();
        assert_eq!(e, Error::Parse { line: 2, column: 5, message: "edge references unknown vertex `zz`".into() });
        let e = parse_graph("v a two\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, column: 5, .. }));
        let e = parse_graph("q a 1\n").unwrap_err();
        assert!(matches!(e, Error::Parse { line: 1, column: 1, .. }));
        let e = parse_graph("v a 1\nv b 1\nv c 1\ne a b\ne b c\ne c a\n").unwrap_err();
        assert!(matches!(e, Error::InvalidGraph(_)));
    }

    #[test]
    fn ranks_inline() {
        assert_eq!(parse_ranks("ranks 1 0 1 0 1 0 1 0").unwrap().ranks, [1, 0, 1, 0, 1, 0, 1, 0]);
        assert!(parse_ranks("ranks 1 0 1").is_err());
        assert!(parse_ranks("ranks 1 0 1 0 1 0 1 -1").is_err());
    }

    #[test]
    fn splice_file() {
        let t = parse_splice("node x 4 7 9\nnode y 2 3 25\nsplice x:3 y:3\n").unwrap();
        assert_eq!(t.splices(), &[Splice { left: 0, left_fiber: 2, right: 1, right_fiber: 2 }]);
        assert!(parse_splice("node x 4 7 9\nnode y 2 3 25\nsplice x:4 y:3\n").is_err());
        assert!(parse_splice("node x 4 7 9\nsplice x:1 x:2\n").is_err());
    }

    #[test]
    fn inline_dispatch() {
        assert_eq!(parse_inline("seifert 2 3 5").unwrap().kind(), InputKind::SeifertInline);
        assert_eq!(parse_inline("ranks 0 0 0 0 0 0 0 0").unwrap().kind(), InputKind::RanksInline);
        assert!(parse_inline("graph foo").is_err());
    }
}
