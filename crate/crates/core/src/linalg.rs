//! Exact dense linear algebra over the integers and rationals.
//!
//! Plumbing matrices are small and very sparse (a tree plus a diagonal), so
//! every routine here skips zero entries in its inner loops. Nothing in this
//! module touches floating point.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Inertia of a real symmetric matrix: counts of positive, negative and zero
/// eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Inertia {
    pub n_plus: usize,
    pub n_minus: usize,
    pub n_zero: usize,
}

impl Inertia {
    pub fn signature(&self) -> i64 {
        self.n_plus as i64 - self.n_minus as i64
    }
}

/// Fraction-free (Bareiss) determinant of a square integer matrix.
///
/// The empty matrix has determinant 1.
pub fn determinant(rows: &[Vec<i64>]) -> BigInt {
    let n = rows.len();
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .map(|r| {
            assert_eq!(r.len(), n, "determinant of a non-square matrix");
            r.iter().map(|&x| BigInt::from(x)).collect()
        })
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            let aik = a[i][k].clone();
            for j in k + 1..n {
                // exact by Sylvester's identity
                let num = &a[k][k] * &a[i][j] - &aik * &a[k][j];
                a[i][j] = num / &prev;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        sign
    } else {
        sign * &a[n - 1][n - 1]
    }
}

/// Inertia of a symmetric integer matrix by symmetric elimination over the
/// rationals.
///
/// A zero diagonal pivot whose row still has a nonzero entry is eliminated
/// together with that partner as a 2x2 block `[[0, b], [b, c]]`. Such a block
/// has determinant `-b^2 < 0`, so it contributes one positive and one
/// negative eigenvalue.
pub fn inertia(rows: &[Vec<i64>]) -> Inertia {
    let n = rows.len();
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut alive: Vec<usize> = (0..n).collect();
    let mut out = Inertia { n_plus: 0, n_minus: 0, n_zero: 0 };

    while let Some(&k) = alive.first() {
        if !a[k][k].is_zero() {
            if a[k][k].is_positive() {
                out.n_plus += 1;
            } else {
                out.n_minus += 1;
            }
            alive.remove(0);
            let nz: Vec<usize> = alive.iter().copied().filter(|&i| !a[i][k].is_zero()).collect();
            let piv = a[k][k].clone();
            for &i in &nz {
                let f = &a[i][k] / &piv;
                for &j in &nz {
                    let d = &f * &a[k][j];
                    a[i][j] -= d;
                }
            }
            continue;
        }
        let partner = alive[1..].iter().copied().find(|&j| !a[k][j].is_zero());
        let Some(j) = partner else {
            out.n_zero += 1;
            alive.remove(0);
            continue;
        };
        out.n_plus += 1;
        out.n_minus += 1;
        alive.retain(|&i| i != k && i != j);
        let b = a[k][j].clone();
        let c = a[j][j].clone();
        let det = -(&b * &b);
        let nz: Vec<usize> = alive
            .iter()
            .copied()
            .filter(|&i| !a[i][k].is_zero() || !a[i][j].is_zero())
            .collect();
        for &i in &nz {
            for &l in &nz {
                let (u, v) = (&a[i][k], &a[i][j]);
                let (x, y) = (&a[k][l], &a[j][l]);
                let q = (&c * u * x - &b * u * y - &b * v * x) / &det;
                a[i][l] -= q;
            }
        }
    }
    out
}

/// Solves `A x = rhs` over the rationals. Returns `None` when `A` is singular.
pub fn solve_rational(rows: &[Vec<i64>], rhs: &[i64]) -> Option<Vec<BigRational>> {
    let n = rows.len();
    assert_eq!(rhs.len(), n);
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, &b)| {
            r.iter()
                .chain(std::iter::once(&b))
                .map(|&x| BigRational::from_integer(x.into()))
                .collect()
        })
        .collect();
    for k in 0..n {
        let p = (k..n).find(|&i| !a[i][k].is_zero())?;
        a.swap(k, p);
        let piv = a[k][k].clone();
        let cols: Vec<usize> = (k + 1..=n).filter(|&j| !a[k][j].is_zero()).collect();
        for i in 0..n {
            if i == k || a[i][k].is_zero() {
                continue;
            }
            let f = &a[i][k] / &piv;
            for &j in &cols {
                let d = &f * &a[k][j];
                a[i][j] -= d;
            }
            a[i][k] = BigRational::zero();
        }
    }
    Some((0..n).map(|i| &a[i][n] / &a[i][i]).collect())
}

/// `x^T A y` for integer vectors.
pub fn bilinear(rows: &[Vec<i64>], x: &[BigInt], y: &[BigInt]) -> BigInt {
    let mut acc = BigInt::zero();
    for (i, row) in rows.iter().enumerate() {
        if x[i].is_zero() {
            continue;
        }
        let mut s = BigInt::zero();
        for (j, &aij) in row.iter().enumerate() {
            if aij != 0 && !y[j].is_zero() {
                s += &y[j] * aij;
            }
        }
        acc += &x[i] * s;
    }
    acc
}
