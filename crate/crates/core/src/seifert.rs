//! Seifert fibered homology spheres, their star-shaped plumbings, and
//! splicing.
//!
//! `Σ(a1, ..., an)` always carries the orientation it has as the link of a
//! Brieskorn–Hamm singularity, i.e. as the boundary of its negative-definite
//! resolution plumbing.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{PlumbingGraph, Vertex};
use crate::wu;

/// Seifert invariants `(a1, ..., an)` of a homology sphere, in the order the
/// caller supplied them.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u64>", into = "Vec<u64>")]
pub struct SeifertData {
    invariants: Vec<u64>,
}

impl SeifertData {
    pub fn new(invariants: Vec<u64>) -> Result<Self> {
        match Self::validate(&invariants) {
            Ok(()) => Ok(SeifertData { invariants }),
            Err(reason) => Err(Error::InvalidSeifertData { invariants, reason }),
        }
    }

    fn validate(invariants: &[u64]) -> std::result::Result<(), String> {
        if invariants.iter().any(|&x| x == 0) {
            return Err("invariants must be >= 1".into());
        }
        if invariants.iter().filter(|&&x| x == 1).count() > 1 {
            return Err("at most one invariant may equal 1".into());
        }
        for i in 0..invariants.len() {
            for j in i + 1..invariants.len() {
                let (x, y) = (invariants[i], invariants[j]);
                if x.gcd(&y) != 1 {
                    return Err(format!("{x} and {y} are not relatively prime"));
                }
            }
        }
        if invariants.iter().try_fold(1u128, |acc, &x| acc.checked_mul(x as u128)).is_none() {
            return Err("product of invariants overflows".into());
        }
        Ok(())
    }

    pub fn invariants(&self) -> &[u64] {
        &self.invariants
    }

    pub fn len(&self) -> usize {
        self.invariants.len()
    }

    pub fn is_empty(&self) -> bool {
        self.invariants.is_empty()
    }

    /// Sorted ascending with entries equal to 1 removed.
    pub fn canonical(&self) -> SeifertData {
        let mut v: Vec<u64> = self.invariants.iter().copied().filter(|&x| x != 1).collect();
        v.sort_unstable();
        SeifertData { invariants: v }
    }

    /// Whether two data name the same oriented manifold.
    pub fn same_manifold(&self, other: &SeifertData) -> bool {
        self.canonical() == other.canonical()
    }

    fn product_u128(&self) -> Option<u128> {
        self.invariants.iter().try_fold(1u128, |acc, &x| acc.checked_mul(x as u128))
    }

    /// `a = a1 * ... * an`.
    pub fn product(&self) -> u128 {
        self.product_u128().expect("checked at construction")
    }

    /// `∏ (ai - 1)`, the rank of the Milnor fiber's middle homology.
    pub fn milnor_rank(&self) -> u128 {
        self.invariants.iter().map(|&x| (x - 1) as u128).product()
    }

    pub fn is_three_fibered(&self) -> bool {
        self.invariants.len() == 3
    }
}

impl TryFrom<Vec<u64>> for SeifertData {
    type Error = Error;
    fn try_from(v: Vec<u64>) -> Result<Self> {
        SeifertData::new(v)
    }
}

impl From<SeifertData> for Vec<u64> {
    fn from(s: SeifertData) -> Self {
        s.invariants
    }
}

impl fmt::Display for SeifertData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Σ(")?;
        for (i, a) in self.invariants.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

/// Unnormalized Seifert pairs: `bi` with `bi * (a/ai) ≡ -1 (mod ai)`,
/// `0 < bi < ai`, and the central `b0 = (1 + Σ bi a/ai) / a`.
pub(crate) fn seifert_pairs(s: &SeifertData) -> (i128, Vec<(i128, i128)>) {
    let c = s.canonical();
    let a = c.product() as i128;
    let mut sum = 1i128;
    let pairs: Vec<(i128, i128)> = c
        .invariants
        .iter()
        .map(|&ai| {
            let ai = ai as i128;
            let rest = a / ai;
            // rest is a unit mod ai
            let inv = rest.extended_gcd(&ai).x.rem_euclid(ai);
            let bi = (-inv).rem_euclid(ai);
            sum += bi * rest;
            (ai, bi)
        })
        .collect();
    debug_assert_eq!(sum % a, 0);
    (sum / a, pairs)
}

/// Negative continued fraction `p/q = c1 - 1/(c2 - ...)` with all `cj >= 2`,
/// for `p > q >= 1`.
pub fn negative_continued_fraction(mut p: i128, mut q: i128) -> Vec<i128> {
    assert!(p > q && q >= 1, "need p > q >= 1, got {p}/{q}");
    let mut out = Vec::new();
    while q != 0 {
        let c = (p + q - 1) / q;
        out.push(c);
        (p, q) = (q, c * q - p);
    }
    out
}

/// Continued fraction with even entries, for `p/q` in lowest terms with `p`
/// and `q` of opposite parity. Entries may be negative.
fn even_continued_fraction(mut p: i128, mut q: i128) -> Vec<i128> {
    let mut out = Vec::new();
    loop {
        if q < 0 {
            (p, q) = (-p, -q);
        }
        debug_assert!((p + q) % 2 != 0);
        if q == 1 {
            out.push(p);
            return out;
        }
        let w = 2 * Integer::div_floor(&(p + q), &(2 * q));
        out.push(w);
        (p, q) = (q, w * q - p);
    }
}

fn star_graph(center: i128, arms: &[Vec<i128>]) -> PlumbingGraph {
    let mut vertices = vec![Vertex { id: "c".into(), weight: center as i64 }];
    let mut edges = Vec::new();
    for (i, arm) in arms.iter().enumerate() {
        let mut prev = "c".to_string();
        for (j, &w) in arm.iter().enumerate() {
            let id = format!("a{}_{}", i + 1, j + 1);
            vertices.push(Vertex { id: id.clone(), weight: w as i64 });
            edges.push((prev, id.clone()));
            prev = id;
        }
    }
    PlumbingGraph::new(vertices, &edges).expect("star graph is a tree")
}

/// The negative-definite star-shaped resolution plumbing of `Σ(a1..an)`.
///
/// Central weight `-b0`; arm `i` carries `-c_ij` where `ai/bi = [c_i1, ...]`
/// is the negative continued fraction.
pub fn canonical_plumbing(s: &SeifertData) -> PlumbingGraph {
    let (b0, pairs) = seifert_pairs(s);
    let arms: Vec<Vec<i128>> = pairs
        .iter()
        .map(|&(a, b)| negative_continued_fraction(a, b).into_iter().map(|c| -c).collect())
        .collect();
    star_graph(-b0, &arms)
}

/// A star-shaped plumbing with only even weights bounding `Σ(a1..an)`, when
/// one exists with the same Seifert fibration.
///
/// Each arm realizes `ai / (mi ai - bi)` with `mi` chosen so numerator and
/// denominator have opposite parity, which makes an even expansion possible;
/// the central weight is `-b0 + Σ mi` and must come out even.
pub fn even_star_plumbing(s: &SeifertData) -> Option<PlumbingGraph> {
    let (b0, pairs) = seifert_pairs(s);
    let mut ms: Vec<i128> = pairs.iter().map(|&(a, b)| if a % 2 == 0 { 0 } else { b % 2 }).collect();
    let mut center = -b0 + ms.iter().sum::<i128>();
    if center % 2 != 0 {
        let free = pairs.iter().position(|&(a, _)| a % 2 == 0)?;
        ms[free] += 1;
        center += 1;
    }
    let arms: Vec<Vec<i128>> = pairs
        .iter()
        .zip(&ms)
        .map(|(&(a, b), &m)| even_continued_fraction(a, m * a - b))
        .collect();
    Some(star_graph(center, &arms))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    /// Boundary of the negative-definite resolution.
    Standard,
    Reversed,
}

/// Identifies the boundary of a connected star-shaped (or linear) plumbing
/// as a Seifert fibered homology sphere.
///
/// Returns `None` when the graph has more than one node of degree at least
/// three, is disconnected, has an arm whose continued fraction passes through
/// zero, or does not bound a homology sphere.
pub fn seifert_boundary(g: &PlumbingGraph) -> Option<(SeifertData, Orientation)> {
    let n = g.len();
    if n == 0 || g.edge_count() + 1 != n {
        return None;
    }
    let nodes: Vec<usize> = (0..n).filter(|&v| g.degree(v) >= 3).collect();
    let center = match nodes.as_slice() {
        [] => 0,
        [c] => *c,
        _ => return None,
    };
    let weight = |v: usize| BigRational::from_integer(BigInt::from(g.vertices()[v].weight));

    let mut euler = weight(center);
    let mut alphas = Vec::new();
    for start in g.neighbors(center) {
        let mut arm = vec![start];
        let mut prev = center;
        loop {
            let cur = *arm.last().unwrap();
            let next: Vec<usize> = g.neighbors(cur).into_iter().filter(|&x| x != prev).collect();
            match next.as_slice() {
                [] => break,
                [x] => {
                    prev = cur;
                    arm.push(*x);
                }
                _ => return None,
            }
        }
        let mut val = weight(*arm.last().unwrap());
        for &v in arm.iter().rev().skip(1) {
            if val.is_zero() {
                return None;
            }
            val = weight(v) - val.recip();
        }
        if val.is_zero() {
            return None;
        }
        euler -= val.recip();
        let alpha = val.numer().abs().to_u64()?;
        if alpha != 1 {
            alphas.push(alpha);
        }
    }
    let data = SeifertData::new(alphas).ok()?.canonical();
    let scaled = &euler * BigRational::from_integer(BigInt::from(data.product()));
    if !scaled.is_integer() || !scaled.numer().abs().is_one() {
        return None;
    }
    let orientation = if euler.is_negative() { Orientation::Standard } else { Orientation::Reversed };
    Some((data, orientation))
}

pub fn mubar_seifert(s: &SeifertData) -> Result<i64> {
    Ok(wu::mubar(&canonical_plumbing(s))?.value)
}

/// `(Σ(a1..aj, p), Σ(q, a_{j+1}..an))` with `q = a1...aj`, `p = a_{j+1}...an`.
pub fn splice_decompose(s: &SeifertData, j: usize) -> Result<(SeifertData, SeifertData)> {
    let n = s.len();
    if n < 4 || j < 2 || j > n - 2 {
        return Err(Error::IndexOutOfRange { index: j, max: n.saturating_sub(2), len: n });
    }
    let (head, tail) = s.invariants.split_at(j);
    let q: u64 = head.iter().product();
    let p: u64 = tail.iter().product();
    let mut left = head.to_vec();
    left.push(p);
    let mut right = vec![q];
    right.extend_from_slice(tail);
    Ok((SeifertData::new(left)?, SeifertData::new(right)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Splice {
    pub left: usize,
    pub left_fiber: usize,
    pub right: usize,
    pub right_fiber: usize,
}

/// Seifert nodes glued along singular fibers. Fiber indices are 0-based
/// positions in each node's invariant list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpliceTree {
    ids: Vec<String>,
    nodes: Vec<SeifertData>,
    splices: Vec<Splice>,
}

impl SpliceTree {
    pub fn new(nodes: Vec<(String, SeifertData)>, splices: Vec<Splice>) -> Result<Self> {
        let bad = |m: String| Error::MalformedSplice(m);
        if nodes.is_empty() {
            return Err(bad("no nodes".into()));
        }
        let mut seen = HashMap::new();
        for (i, (id, _)) in nodes.iter().enumerate() {
            if seen.insert(id.clone(), i).is_some() {
                return Err(bad(format!("duplicate node id `{id}`")));
            }
        }
        let (ids, nodes): (Vec<String>, Vec<SeifertData>) = nodes.into_iter().unzip();
        let mut used = BTreeSet::new();
        let mut parent: Vec<usize> = (0..nodes.len()).collect();
        fn root(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for sp in &splices {
            for (node, fiber) in [(sp.left, sp.left_fiber), (sp.right, sp.right_fiber)] {
                let Some(data) = nodes.get(node) else {
                    return Err(bad(format!("splice references node #{node}")));
                };
                if fiber >= data.len() {
                    return Err(bad(format!("node `{}` has no fiber #{}", ids[node], fiber + 1)));
                }
                if !used.insert((node, fiber)) {
                    return Err(bad(format!("fiber #{} of `{}` spliced twice", fiber + 1, ids[node])));
                }
            }
            if sp.left == sp.right {
                return Err(bad(format!("node `{}` spliced to itself", ids[sp.left])));
            }
            let (a, b) = (root(&mut parent, sp.left), root(&mut parent, sp.right));
            if a == b {
                return Err(bad("splice diagram contains a cycle".into()));
            }
            parent[a] = b;
        }
        if splices.len() + 1 != nodes.len() {
            return Err(bad("splice diagram is disconnected".into()));
        }
        Ok(SpliceTree { ids, nodes, splices })
    }

    pub fn nodes(&self) -> impl Iterator<Item = (&str, &SeifertData)> {
        self.ids.iter().map(String::as_str).zip(&self.nodes)
    }

    pub fn splices(&self) -> &[Splice] {
        &self.splices
    }

    pub fn node_index(&self, id: &str) -> Option<usize> {
        self.ids.iter().position(|x| x == id)
    }
}

/// `mubar` of a splice, by additivity over the Seifert pieces.
pub fn splice_mubar(t: &SpliceTree) -> Result<i64> {
    t.nodes.iter().map(mubar_seifert).sum()
}

/// Whether the splice of `Σ(p,q,r)` and `Σ(p',q',r')` along the `r` and `r'`
/// fibers is the link of a singularity: `r r' > p p' q q'`.
pub fn is_algebraic_splice(left: (u64, u64, u64), right: (u64, u64, u64)) -> Result<bool> {
    SeifertData::new(vec![left.0, left.1, left.2])?;
    SeifertData::new(vec![right.0, right.1, right.2])?;
    let rr = left.2 as u128 * right.2 as u128;
    let pq = left.0 as u128 * right.0 as u128 * left.1 as u128 * right.1 as u128;
    debug_assert_ne!(rr, pq);
    Ok(rr > pq)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SurgerySign {
    Plus,
    Minus,
}

impl SurgerySign {
    pub fn value(self) -> i128 {
        match self {
            SurgerySign::Plus => 1,
            SurgerySign::Minus => -1,
        }
    }
}

/// `Σ(a1, ..., a_{n-1}, 2ak ± 1)` with `a = a1 ... a_{n-1}`.
pub fn surgery_family(base: &[u64], k: u64, sign: SurgerySign) -> Result<SeifertData> {
    let err = |reason: &str| Error::InvalidSeifertData { invariants: base.to_vec(), reason: reason.into() };
    if k == 0 {
        return Err(err("k must be positive"));
    }
    let a = SeifertData::new(base.to_vec())?.product() as i128;
    let last = 2 * a * k as i128 + sign.value();
    let last = u64::try_from(last).map_err(|_| err("family member overflows"))?;
    let mut v = base.to_vec();
    v.push(last);
    SeifertData::new(v)
}

/// `Σ(a1, ..., a_{n-1}, 2a ± an)`, the other side of the surgery relation on
/// the last singular fiber.
pub fn surgery_partner(s: &SeifertData, sign: SurgerySign) -> Result<SeifertData> {
    let n = s.len();
    let err = |reason: &str| Error::InvalidSeifertData { invariants: s.invariants.clone(), reason: reason.into() };
    if n < 2 {
        return Err(err("need at least two invariants"));
    }
    let a: i128 = s.invariants[..n - 1].iter().map(|&x| x as i128).product();
    let last = 2 * a + sign.value() * s.invariants[n - 1] as i128;
    if last < 1 {
        return Err(err("2a - an is not positive"));
    }
    let mut v = s.invariants[..n - 1].to_vec();
    v.push(last as u64);
    SeifertData::new(v)
}

/// Whether `Σ` has the form `Σ(p, q, pqk + 1)` (in some order) with `k` odd
/// and positive, the family in which no multiple bounds a contractible
/// 4-manifold.
pub fn theorem3_family(s: &SeifertData) -> Option<(u64, u64, u64)> {
    let c = s.canonical();
    if c.len() != 3 {
        return None;
    }
    let v = c.invariants();
    [(0, 1, 2), (0, 2, 1), (1, 2, 0)].into_iter().find_map(|(i, j, l)| {
        let (p, q, r) = (v[i], v[j], v[l]);
        let pq = p * q;
        let k = (r - 1) / pq;
        (r > 1 && (r - 1) % pq == 0 && k % 2 == 1).then_some((p, q, k))
    })
}
