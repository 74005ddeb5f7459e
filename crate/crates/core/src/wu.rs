//! Integral Wu class, the Neumann–Siebenmann invariant, and the
//! negative-definite obstruction it feeds.
//!
//! For a plumbing `P` whose boundary is a homology sphere, the Wu class `w`
//! is the unique vector with 0/1 coordinates satisfying
//! `A w = diag(A) (mod 2)`, and
//!
//! ```text
//!     mubar = (sign P - w.w) / 8.
//! ```
//!
//! The value is normalized so that `mubar mod 2` is the Rochlin invariant.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2;
use crate::graph::{self, FormSummary, IntersectionMatrix, PlumbingGraph};
use crate::linalg;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WuClass {
    pub coords: Vec<u8>,
}

impl WuClass {
    pub fn as_bigints(&self) -> Vec<BigInt> {
        self.coords.iter().map(|&c| BigInt::from(c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|&c| c == 0)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MubarValue {
    pub value: i64,
    /// `sign P(Γ)`
    pub sign_term: i64,
    /// `w.w`
    pub ww_term: i64,
}

impl MubarValue {
    /// Rochlin invariant in `{0, 1}`.
    pub fn rochlin(&self) -> u8 {
        self.value.rem_euclid(2) as u8
    }
}

fn require_homology_sphere(m: &IntersectionMatrix) -> Result<()> {
    let det = graph::determinant(m);
    if det.abs() == BigInt::from(1) {
        Ok(())
    } else {
        Err(Error::NotHomologySphere { det: det.to_string() })
    }
}

/// Characteristic 0/1 vector of a unimodular (odd-determinant suffices)
/// symmetric matrix.
pub fn characteristic_vector(m: &IntersectionMatrix) -> Result<WuClass> {
    let diag = m.diagonal();
    let sol = gf2::solve_mod2(m.rows(), &diag)
        .ok_or_else(|| Error::SolveFailure("intersection matrix is singular mod 2".into()))?;
    if !gf2::satisfies_mod2(m.rows(), &sol, &diag) {
        return Err(Error::SolveFailure("solution fails A w = diag(A) mod 2".into()));
    }
    Ok(WuClass { coords: sol.into_iter().map(u8::from).collect() })
}

pub fn wu_class(g: &PlumbingGraph) -> Result<WuClass> {
    let m = graph::build_intersection_matrix(g);
    require_homology_sphere(&m)?;
    characteristic_vector(&m)
}

/// `x^T A x` for an integer vector.
pub fn square(m: &IntersectionMatrix, x: &[BigInt]) -> BigInt {
    linalg::bilinear(m.rows(), x, x)
}

fn mubar_from(form: &FormSummary, m: &IntersectionMatrix, w: &WuClass) -> Result<MubarValue> {
    let ww = square(m, &w.as_bigints());
    let diff = BigInt::from(form.signature()) - &ww;
    let (q, r) = diff.div_rem(&BigInt::from(8));
    if !r.is_zero() {
        return Err(Error::NonDivisibleBy8 { what: "sign - w.w", value: diff.to_string() });
    }
    let narrow = |x: &BigInt| {
        x.to_i64()
            .ok_or_else(|| Error::SolveFailure(format!("{x} does not fit in 64 bits")))
    };
    Ok(MubarValue { value: narrow(&q)?, sign_term: form.signature(), ww_term: narrow(&ww)? })
}

pub fn mubar(g: &PlumbingGraph) -> Result<MubarValue> {
    Ok(analyze(g)?.mubar)
}

pub fn rochlin(g: &PlumbingGraph) -> Result<u8> {
    let mu = mubar(g)?;
    debug_assert_eq!(mu.rochlin() as i64, mu.value.rem_euclid(2));
    Ok(mu.rochlin())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Verdict {
    /// The plumbing is negative definite, so the boundary is an algebraic
    /// link and the `mubar >= 0` criterion applies.
    pub applies: bool,
    /// `applies && mubar < 0`: the boundary cannot bound a homology ball and
    /// has infinite order in the homology cobordism group.
    pub bounds_ball_excluded: bool,
    pub mubar: i64,
}

pub fn theorem1_verdict(g: &PlumbingGraph) -> Result<Theorem1Verdict> {
    let a = analyze(g)?;
    let applies = a.form.is_negative_definite();
    Ok(Theorem1Verdict { applies, bounds_ball_excluded: applies && a.mubar.value < 0, mubar: a.mubar.value })
}

impl Theorem1Verdict {
    pub fn certificate(&self) -> String {
        if self.bounds_ball_excluded {
            format!(
                "negative-definite plumbing with mubar = {} < 0: not homology cobordant to zero, \
                 and every nonzero multiple has mubar < 0, so the class has infinite order",
                self.mubar
            )
        } else if self.applies {
            format!("negative-definite plumbing with mubar = {} >= 0: no obstruction", self.mubar)
        } else {
            "plumbing is not negative definite: criterion does not apply".to_string()
        }
    }
}

/// Everything the Wu-class computation derives from one plumbing, computed once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlumbingAnalysis {
    pub matrix: IntersectionMatrix,
    pub form: FormSummary,
    pub wu: WuClass,
    pub mubar: MubarValue,
}

pub fn analyze(g: &PlumbingGraph) -> Result<PlumbingAnalysis> {
    let matrix = graph::build_intersection_matrix(g);
    let form = graph::signature(&matrix);
    if !form.is_unimodular() {
        return Err(Error::NotHomologySphere { det: form.determinant.to_string() });
    }
    let wu = characteristic_vector(&matrix)?;
    let mubar = mubar_from(&form, &matrix, &wu)?;
    Ok(PlumbingAnalysis { matrix, form, wu, mubar })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::e8_graph;

    fn star(center: i64, arms: &[&[i64]]) -> PlumbingGraph {
        let mut w = vec![center];
        let mut e = Vec::new();
        for arm in arms {
            let mut prev = 0;
            for &x in *arm {
                w.push(x);
                e.push((prev, w.len() - 1));
                prev = w.len() - 1;
            }
        }
        PlumbingGraph::from_weights(&w, &e).unwrap()
    }

    #[test]
    fn even_plumbing_has_zero_wu_class() {
        let w = wu_class(&e8_graph(-2)).unwrap();
        assert!(w.is_zero());
        assert_eq!(w.coords.len(), 8);
    }

    #[test]
    fn single_plus_one_vertex() {
        let g = PlumbingGraph::from_weights(&[1], &[]).unwrap();
        assert_eq!(wu_class(&g).unwrap().coords, vec![1]);
        assert_eq!(mubar(&g).unwrap().value, 0);
    }

    #[test]
    fn poincare_sphere() {
        let g = e8_graph(-2);
        let mu = mubar(&g).unwrap();
        assert_eq!(mu, MubarValue { value: -1, sign_term: -8, ww_term: 0 });
        assert_eq!(rochlin(&g).unwrap(), 1);
        let v = theorem1_verdict(&g).unwrap();
        assert!(v.applies && v.bounds_ball_excluded);
    }

    #[test]
    fn brieskorn_237_star() {
        let g = star(-1, &[&[-2], &[-3], &[-7]]);
        assert_eq!(wu_class(&g).unwrap().coords, vec![0, 1, 1, 1]);
        let mu = mubar(&g).unwrap();
        assert_eq!(mu.value, 1);
        assert_eq!(8 * mu.value, mu.sign_term - mu.ww_term);
        let v = theorem1_verdict(&g).unwrap();
        assert!(v.applies && !v.bounds_ball_excluded);
    }

    #[test]
    fn indefinite_plumbing_does_not_apply() {
        let g = PlumbingGraph::from_weights(&[0, 0], &[(0, 1)]).unwrap();
        let v = theorem1_verdict(&g).unwrap();
        assert!(!v.applies && !v.bounds_ball_excluded);
    }

    #[test]
    fn rejects_non_spheres() {
        let g = PlumbingGraph::from_weights(&[-2], &[]).unwrap();
        assert!(matches!(wu_class(&g), Err(Error::NotHomologySphere { .. })));
        assert!(matches!(mubar(&g), Err(Error::NotHomologySphere { .. })));
        assert!(matches!(theorem1_verdict(&g), Err(Error::NotHomologySphere { .. })));
    }
}
