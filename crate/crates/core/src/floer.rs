//! Bookkeeping on rational ranks of instanton Floer homology.
//!
//! Ranks are input data (from a file or one of the family generators below);
//! nothing here computes Floer homology. Gradings are taken mod 8.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gauge::Fraction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FloerRanks {
    pub ranks: [u64; 8],
}

/// `(-1)^((n+1)(n+2)/2)` for `n = 0..7`.
pub const NU_SIGNS: [i64; 8] = {
    let mut out = [0i64; 8];
    let mut n = 0;
    while n < 8 {
        let e = (n + 1) * (n + 2) / 2;
        out[n] = if e % 2 == 0 { 1 } else { -1 };
        n += 1;
    }
    out
};

impl FloerRanks {
    pub fn new(ranks: [u64; 8]) -> Self {
        FloerRanks { ranks }
    }

    pub fn zero() -> Self {
        FloerRanks { ranks: [0; 8] }
    }

    pub fn get(&self, n: i64) -> u64 {
        self.ranks[n.rem_euclid(8) as usize]
    }

    pub fn total(&self) -> u64 {
        self.ranks.iter().sum()
    }

    /// Rank vector of the orientation-reversed sphere, under the convention
    /// `r_n(-Σ) = r_{7-n}(Σ)`. This negates both the Casson invariant and `ν`.
    pub fn reversed(&self) -> Self {
        let mut out = [0; 8];
        for (n, slot) in out.iter_mut().enumerate() {
            *slot = self.get(7 - n as i64);
        }
        FloerRanks { ranks: out }
    }

    /// Shift of every grading by `k`.
    pub fn shifted(&self, k: i64) -> Self {
        let mut out = [0; 8];
        for (n, slot) in out.iter_mut().enumerate() {
            *slot = self.get(n as i64 - k);
        }
        FloerRanks { ranks: out }
    }
}

/// Exact value `numerator / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HalfInteger {
    pub numerator: i64,
}

impl HalfInteger {
    pub fn value(&self) -> Fraction {
        Fraction::new(self.numerator, 2)
    }

    pub fn is_integer(&self) -> bool {
        self.numerator % 2 == 0
    }

    pub fn as_integer(&self) -> Option<i64> {
        self.is_integer().then_some(self.numerator / 2)
    }
}

impl std::fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.value().fmt(f)
    }
}

pub type NuValue = HalfInteger;

/// Casson invariant as half the Euler characteristic of Floer homology.
pub fn casson_from_ranks(f: &FloerRanks) -> HalfInteger {
    let num = f
        .ranks
        .iter()
        .enumerate()
        .map(|(n, &r)| if n % 2 == 0 { r as i64 } else { -(r as i64) })
        .sum();
    HalfInteger { numerator: num }
}

pub fn nu_from_ranks(f: &FloerRanks) -> NuValue {
    let num = f.ranks.iter().zip(NU_SIGNS).map(|(&r, s)| s * r as i64).sum();
    HalfInteger { numerator: num }
}

pub fn is_two_periodic(f: &FloerRanks) -> bool {
    (0..8).all(|n| f.get(n) == f.get(n + 2))
}

pub fn is_four_periodic(f: &FloerRanks) -> bool {
    (0..8).all(|n| f.get(n) == f.get(n + 4))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GradingParity {
    Even,
    Odd,
}

/// One copy of `Z` in every grading of the given parity.
pub fn ranks_theorem6(parity: GradingParity) -> FloerRanks {
    let even = FloerRanks::new([1, 0, 1, 0, 1, 0, 1, 0]);
    match parity {
        GradingParity::Even => even,
        GradingParity::Odd => even.shifted(1),
    }
}

fn even_graded(rank: u64) -> FloerRanks {
    FloerRanks::new([rank, 0, rank, 0, rank, 0, rank, 0])
}

fn exact_rank(num: i128, den: i128, what: String) -> Result<u64> {
    if num < 0 || num % den != 0 {
        return Err(Error::NonIntegralRank(format!("{what} = {num}/{den}")));
    }
    u64::try_from(num / den).map_err(|_| Error::NonIntegralRank(format!("{what} overflows")))
}

/// Ranks of `Σ(p, ps ± 1, ps ± 2)`: `s(p²-1)(ps ± 3)/48` in each even grading.
pub fn ranks_theorem7(p: u64, s: u64, plus: bool) -> Result<FloerRanks> {
    if p < 3 || p % 2 == 0 || s < 1 {
        return Err(Error::NonIntegralRank(format!("need odd p >= 3 and s >= 1, got p = {p}, s = {s}")));
    }
    let (p, s) = (p as i128, s as i128);
    let tail = if plus { p * s + 3 } else { p * s - 3 };
    let rank = exact_rank(s * (p * p - 1) * tail, 48, format!("s(p²-1)(ps{}3)/48", if plus { '+' } else { '-' }))?;
    Ok(even_graded(rank))
}

/// Ranks of `(-1/n)`-surgery on `T(p,q) # T(p,q)*`: `n(p²-1)(q²-1)/24` in each
/// even grading.
pub fn ranks_theorem8(p: u64, q: u64, n: u64) -> Result<FloerRanks> {
    use num_integer::Integer;
    if p < 2 || q < 2 || p.gcd(&q) != 1 || n < 1 {
        return Err(Error::NonIntegralRank(format!("need coprime p, q >= 2 and n >= 1, got ({p}, {q}, {n})")));
    }
    let (p, q, n) = (p as i128, q as i128, n as i128);
    let rank = exact_rank(n * (p * p - 1) * (q * q - 1), 24, "n(p²-1)(q²-1)/24".into())?;
    Ok(even_graded(rank))
}

/// Whether `ν ≡ μ (mod 2)` for a 4-periodic rank vector.
pub fn nu_mod2_matches_rochlin(f: &FloerRanks, mu: u8) -> Result<bool> {
    if !is_four_periodic(f) {
        return Err(Error::NotFourPeriodic);
    }
    let nu = nu_from_ranks(f);
    let v = nu.as_integer().ok_or_else(|| Error::NonIntegralNu(nu.to_string()))?;
    Ok(v.rem_euclid(2) == (mu % 2) as i64)
}
