//! Compact exponent matrices: every column a modular multiple of one seed
//! column.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::ExponentMatrix;

/// Column `j` of the matrix is `coefficients[j] * seed mod lifting`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CompactSpec {
    pub seed: Vec<u32>,
    pub coefficients: Vec<u32>,
    pub lifting: usize,
}

impl CompactSpec {
    pub fn new(seed: Vec<u32>, coefficients: Vec<u32>, lifting: usize) -> Result<Self> {
        let spec = Self {
            seed,
            coefficients,
            lifting,
        };
        spec.validate()?;
        Ok(spec)
    }

    /// Column weight.
    pub fn gamma(&self) -> usize {
        self.seed.len()
    }

    /// Number of columns.
    pub fn n(&self) -> usize {
        self.coefficients.len()
    }

    pub fn validate(&self) -> Result<()> {
        let n = self.lifting;
        if n < 3 {
            return Err(Error::Params(format!("lifting degree {n} is below 3")));
        }
        let in_range = |x: u32| (2..n as u32).contains(&x);
        check_prefix(&self.seed, "seed")?;
        check_prefix(&self.coefficients, "coefficients")?;
        if let Some(&x) = self.seed.iter().skip(2).find(|&&x| !in_range(x)) {
            return Err(Error::Params(format!("seed entry {x} not in 2..{n}")));
        }
        if let Some(&x) = self.coefficients.iter().skip(2).find(|&&x| !in_range(x)) {
            return Err(Error::Params(format!("coefficient {x} not in 2..{n}")));
        }
        if self.coefficients.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Params(format!(
                "coefficients {:?} are not strictly increasing",
                self.coefficients
            )));
        }
        Ok(())
    }
}

fn check_prefix(v: &[u32], what: &str) -> Result<()> {
    if v.len() < 2 || v[0] != 0 || v[1] != 1 {
        return Err(Error::Params(format!("{what} {v:?} must start with 0, 1")));
    }
    Ok(())
}

/// The `gamma x n` matrix of `spec`.
pub fn build_compact(spec: &CompactSpec) -> Result<ExponentMatrix> {
    spec.validate()?;
    Ok(build_unchecked(&spec.seed, &spec.coefficients, spec.lifting))
}

pub(crate) fn build_unchecked(seed: &[u32], coefficients: &[u32], lifting: usize) -> ExponentMatrix {
    let n = lifting as u64;
    let rows: Vec<Vec<u32>> = seed
        .iter()
        .map(|&s| {
            coefficients
                .iter()
                .map(|&c| (s as u64 * c as u64 % n) as u32)
                .collect()
        })
        .collect();
    ExponentMatrix::from_shifts(lifting, &rows).expect("compact entries are reduced mod N")
}

/// A seed triple and coefficient pair whose product vanishes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CorollaryViolation {
    pub triple: (u32, u32, u32),
    pub coefficients: (u32, u32),
    /// `p + q - 2r` for the ordering that vanished, as a signed value.
    pub phrase: i64,
}

/// Sufficient condition for every 3x3 submatrix to pass: for each triple
/// `p, q, r` of seed entries (distinct positions) and each coefficient pair,
/// `(p+q-2r)(gi-gj)`, `(p+r-2q)(gi-gj)`, `(q+r-2p)(gi-gj)` are nonzero mod N.
pub fn corollary_check(spec: &CompactSpec) -> Result<Option<CorollaryViolation>> {
    spec.validate()?;
    Ok(corollary_unchecked(&spec.seed, &spec.coefficients, spec.lifting))
}

pub(crate) fn corollary_unchecked(seed: &[u32], coefficients: &[u32], lifting: usize) -> Option<CorollaryViolation> {
    let n = lifting as i64;
    let g = seed.len();
    for a in 0..g {
        for b in a + 1..g {
            for c in b + 1..g {
                let (p, q, r) = (seed[a] as i64, seed[b] as i64, seed[c] as i64);
                for phrase in [p + q - 2 * r, p + r - 2 * q, q + r - 2 * p] {
                    for (i, &gi) in coefficients.iter().enumerate() {
                        for &gj in &coefficients[i + 1..] {
                            if (phrase * (gj as i64 - gi as i64)).rem_euclid(n) == 0 {
                                return Some(CorollaryViolation {
                                    triple: (seed[a], seed[b], seed[c]),
                                    coefficients: (gi, gj),
                                    phrase,
                                });
                            }
                        }
                    }
                }
            }
        }
    }
    None
}
