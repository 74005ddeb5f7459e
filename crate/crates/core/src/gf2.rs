//! Dense linear algebra over the two-element field, one bit per entry.

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitRow {
    words: Vec<u64>,
}

impl BitRow {
    pub fn zeros(len: usize) -> Self {
        BitRow { words: vec![0; len.div_ceil(64)] }
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.words[i / 64] >> (i % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, v: bool) {
        let m = 1u64 << (i % 64);
        if v {
            self.words[i / 64] |= m;
        } else {
            self.words[i / 64] &= !m;
        }
    }

    fn xor_assign(&mut self, other: &BitRow) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }
}

/// Solves `A x = b` over GF(2) where `A` is the mod-2 reduction of `rows`.
///
/// Returns `None` if the system is singular; a solution of a singular but
/// consistent system is not reported because callers need uniqueness.
pub fn solve_mod2(rows: &[Vec<i64>], rhs: &[i64]) -> Option<Vec<bool>> {
    let n = rows.len();
    // augmented column lives at index n
    let mut m: Vec<BitRow> = rows
        .iter()
        .zip(rhs)
        .map(|(r, &b)| {
            let mut row = BitRow::zeros(n + 1);
            for (j, &v) in r.iter().enumerate() {
                row.set(j, v.rem_euclid(2) == 1);
            }
            row.set(n, b.rem_euclid(2) == 1);
            row
        })
        .collect();

    for col in 0..n {
        let p = (col..n).find(|&i| m[i].get(col))?;
        m.swap(col, p);
        let pivot = m[col].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != col && row.get(col) {
                row.xor_assign(&pivot);
            }
        }
    }
    Some((0..n).map(|i| m[i].get(n)).collect())
}

/// Checks `A x = b (mod 2)` directly against the integer matrix.
pub fn satisfies_mod2(rows: &[Vec<i64>], x: &[bool], rhs: &[i64]) -> bool {
    rows.iter().zip(rhs).all(|(r, &b)| {
        let s: i64 = r.iter().zip(x).filter(|&(_, &xi)| xi).map(|(&a, _)| a.rem_euclid(2)).sum();
        s.rem_euclid(2) == b.rem_euclid(2)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_system() {
        let a = vec![vec![1, 0], vec![0, 3]];
        assert_eq!(solve_mod2(&a, &[1, 0]), Some(vec![true, false]));
    }

    #[test]
    fn singular_mod_two() {
        let a = vec![vec![2, 1], vec![1, 2]];
        assert!(solve_mod2(&a, &[0, 1]).is_some());
        let even = vec![vec![2, 0], vec![0, 2]];
        assert!(solve_mod2(&even, &[0, 0]).is_none());
    }

    #[test]
    fn wide_rows_cross_word_boundary() {
        let n = 130;
        let a: Vec<Vec<i64>> = (0..n)
            .map(|i| (0..n).map(|j| if i == j { -1 } else if i + 1 == j || j + 1 == i { 1 } else { 0 }).collect())
            .collect();
        let b: Vec<i64> = (0..n).map(|i| (i % 3 == 0) as i64).collect();
        let x = solve_mod2(&a, &b).unwrap();
        assert!(satisfies_mod2(&a, &x, &b));
    }
}
