//! Plumbing graphs and their intersection forms.

use std::collections::{BTreeSet, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Vertex {
    pub id: String,
    pub weight: i64,
}

/// A weighted forest. Vertex order is the row order of the intersection
/// matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbingGraph {
    vertices: Vec<Vertex>,
    // (i, j) with i < j, indices into `vertices`
    edges: BTreeSet<(usize, usize)>,
    index: HashMap<String, usize>,
}

impl PlumbingGraph {
    pub fn new(vertices: Vec<Vertex>, edges: &[(String, String)]) -> Result<Self> {
        let mut index = HashMap::with_capacity(vertices.len());
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.id.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex id `{}`", v.id)));
            }
        }
        let mut idx_edges = Vec::with_capacity(edges.len());
        for (a, b) in edges {
            let look = |id: &String| {
                index
                    .get(id)
                    .copied()
                    .ok_or_else(|| Error::InvalidGraph(format!("edge references unknown vertex `{id}`")))
            };
            idx_edges.push((look(a)?, look(b)?));
        }
        Self::from_indices(vertices, idx_edges)
    }

    /// Builds a graph from vertex weights and index pairs; vertex ids are
    /// `v0, v1, ...`.
    pub fn from_weights(weights: &[i64], edges: &[(usize, usize)]) -> Result<Self> {
        let vertices = weights
            .iter()
            .enumerate()
            .map(|(i, &w)| Vertex { id: format!("v{i}"), weight: w })
            .collect();
        Self::from_indices(vertices, edges.to_vec())
    }

    fn from_indices(vertices: Vec<Vertex>, edges: Vec<(usize, usize)>) -> Result<Self> {
        let n = vertices.len();
        let mut index = HashMap::with_capacity(n);
        for (i, v) in vertices.iter().enumerate() {
            if index.insert(v.id.clone(), i).is_some() {
                return Err(Error::InvalidGraph(format!("duplicate vertex id `{}`", v.id)));
            }
        }
        let mut set = BTreeSet::new();
        let mut dsu = Dsu::new(n);
        for (a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::InvalidGraph(format!("edge ({a}, {b}) out of range")));
            }
            if a == b {
                return Err(Error::InvalidGraph(format!("self-loop at `{}`", vertices[a].id)));
            }
            let e = (a.min(b), a.max(b));
            if !set.insert(e) {
                return Err(Error::InvalidGraph(format!(
                    "duplicate edge `{}`-`{}`",
                    vertices[e.0].id, vertices[e.1].id
                )));
            }
            if !dsu.union(a, b) {
                return Err(Error::InvalidGraph(format!(
                    "edge `{}`-`{}` closes a cycle",
                    vertices[e.0].id, vertices[e.1].id
                )));
            }
        }
        Ok(PlumbingGraph { vertices, edges: set, index })
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edges.contains(&(a.min(b), a.max(b)))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        self.edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == v {
                    Some(b)
                } else if b == v {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.edges.iter().filter(|&&(a, b)| a == v || b == v).count()
    }

    fn fresh_id(&self) -> String {
        (self.len()..)
            .map(|k| format!("x{k}"))
            .find(|id| !self.index.contains_key(id))
            .expect("unbounded id space")
    }
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut c = x;
        while self.0[c] != r {
            let next = self.0[c];
            self.0[c] = r;
            c = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.0[ra] = rb;
        true
    }
}

/// Symmetric integer matrix of a plumbing: weights on the diagonal, 1 for
/// each edge, 0 elsewhere.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct IntersectionMatrix {
    rows: Vec<Vec<i64>>,
}

impl IntersectionMatrix {
    /// Wraps an arbitrary symmetric matrix (forms that do not come from a
    /// plumbing, e.g. `E8 + H` built by hand).
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::InvalidGraph(format!("row {i} has length {}, expected {n}", r.len())));
            }
            for j in 0..i {
                if r[j] != rows[j][i] {
                    return Err(Error::InvalidGraph(format!("matrix not symmetric at ({i}, {j})")));
                }
            }
        }
        Ok(IntersectionMatrix { rows })
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.dim()).map(|i| self.rows[i][i]).collect()
    }

    /// Orthogonal direct sum.
    pub fn direct_sum(&self, other: &IntersectionMatrix) -> IntersectionMatrix {
        let (n, m) = (self.dim(), other.dim());
        let mut rows = vec![vec![0; n + m]; n + m];
        for i in 0..n {
            rows[i][..n].copy_from_slice(&self.rows[i]);
        }
        for i in 0..m {
            rows[n + i][n..].copy_from_slice(&other.rows[i]);
        }
        IntersectionMatrix { rows }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FormSummary {
    pub rank: usize,
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
    pub determinant: BigInt,
    pub parity: Parity,
}

impl FormSummary {
    pub fn signature(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }

    pub fn is_negative_definite(&self) -> bool {
        self.n_minus == self.rank
    }

    pub fn is_definite(&self) -> bool {
        self.n_minus == self.rank || self.n_plus == self.rank
    }

    pub fn is_unimodular(&self) -> bool {
        self.determinant.abs().is_one()
    }
}

pub fn build_intersection_matrix(g: &PlumbingGraph) -> IntersectionMatrix {
    let n = g.len();
    let mut rows = vec![vec![0i64; n]; n];
    for (i, v) in g.vertices.iter().enumerate() {
        rows[i][i] = v.weight;
    }
    for (a, b) in g.edges() {
        rows[a][b] = 1;
        rows[b][a] = 1;
    }
    IntersectionMatrix { rows }
}

pub fn determinant(m: &IntersectionMatrix) -> BigInt {
    linalg::determinant(&m.rows)
}

/// Full summary of the form: exact inertia, determinant and parity.
pub fn signature(m: &IntersectionMatrix) -> FormSummary {
    let inertia = linalg::inertia(&m.rows);
    let parity = if m.diagonal().iter().all(|d| d % 2 == 0) { Parity::Even } else { Parity::Odd };
    FormSummary {
        rank: m.dim(),
        n_plus: inertia.n_plus,
        n_minus: inertia.n_minus,
        n_zero: inertia.n_zero,
        determinant: determinant(m),
        parity,
    }
}

pub fn is_homology_sphere(g: &PlumbingGraph) -> bool {
    determinant(&build_intersection_matrix(g)).abs().is_one()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BlowupSite {
    Vertex(String),
    Edge(String, String),
}

/// Blows up a `(-1)`-sphere at a vertex or on an edge. The boundary
/// 3-manifold is unchanged; the form gains one negative direction.
pub fn graph_blowup(g: &PlumbingGraph, site: &BlowupSite) -> Result<PlumbingGraph> {
    let lookup = |id: &str| {
        g.index_of(id)
            .ok_or_else(|| Error::InvalidGraph(format!("blow-up site references unknown vertex `{id}`")))
    };
    let mut vertices = g.vertices.clone();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    let new = vertices.len();
    match site {
        BlowupSite::Vertex(id) => {
            let v = lookup(id)?;
            vertices[v].weight -= 1;
            edges.push((v, new));
        }
        BlowupSite::Edge(a, b) => {
            let (a, b) = (lookup(a)?, lookup(b)?);
            if !g.has_edge(a, b) {
                return Err(Error::InvalidGraph(format!(
                    "no edge `{}`-`{}` to blow up",
                    g.vertices[a].id, g.vertices[b].id
                )));
            }
            vertices[a].weight -= 1;
            vertices[b].weight -= 1;
            edges.retain(|&e| e != (a.min(b), a.max(b)));
            edges.push((a, new));
            edges.push((b, new));
        }
    }
    vertices.push(Vertex { id: g.fresh_id(), weight: -1 });
    PlumbingGraph::from_indices(vertices, edges)
}

/// Every blow-up site of `g`: all vertices, then all edges.
pub fn blowup_sites(g: &PlumbingGraph) -> Vec<BlowupSite> {
    let mut out: Vec<BlowupSite> = g.vertices.iter().map(|v| BlowupSite::Vertex(v.id.clone())).collect();
    out.extend(
        g.edges()
            .map(|(a, b)| BlowupSite::Edge(g.vertices[a].id.clone(), g.vertices[b].id.clone())),
    );
    out
}

/// The `E8` tree (arms of length 1, 2 and 4 around a trivalent vertex) with
/// every weight equal to `weight`.
pub fn e8_graph(weight: i64) -> PlumbingGraph {
    let edges = [(0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7)];
    PlumbingGraph::from_weights(&[weight; 8], &edges).expect("E8 tree is a valid forest")
}
