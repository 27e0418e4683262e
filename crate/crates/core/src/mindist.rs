//! Minimum distance: exhaustive codeword enumeration for small dimension,
//! branch-and-bound over even-degree v-node sets otherwise.

use std::sync::atomic::{AtomicUsize, Ordering};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::tanner::TannerGraph;

/// Largest dimension accepted by full enumeration.
pub const ENUMERATION_MAX_DIMENSION: usize = 26;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    Enumerate,
    EvenSubgraph,
    Auto,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Distance {
    /// Minimum weight, with one codeword attaining it.
    Exact { value: usize, witness: Vec<usize> },
    /// No nonzero codeword has weight up to `limit`.
    AboveLimit { limit: usize },
    /// The code is `{0}`.
    NoCodeword,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinDistance {
    pub strategy: Strategy,
    pub dimension: usize,
    pub distance: Distance,
}

fn parity_bits(g: &TannerGraph) -> BitMatrix {
    let mut h = BitMatrix::zeros(g.num_checks(), g.num_vars());
    for v in 0..g.num_vars() {
        for &c in g.var_neighbours(v) {
            h.set(c, v, true);
        }
    }
    h
}

/// `limit` bounds the even-subgraph search and defaults to the code length;
/// enumeration ignores it.
pub fn min_distance(g: &TannerGraph, strategy: Strategy, limit: Option<usize>) -> Result<MinDistance> {
    let h = parity_bits(g);
    let basis = h.null_space();
    let dimension = basis.len();
    let chosen = match strategy {
        Strategy::Auto if dimension <= ENUMERATION_MAX_DIMENSION => Strategy::Enumerate,
        Strategy::Auto => Strategy::EvenSubgraph,
        s => s,
    };
    let distance = if dimension == 0 {
        Distance::NoCodeword
    } else {
        match chosen {
            Strategy::Enumerate => {
                if dimension > ENUMERATION_MAX_DIMENSION {
                    return Err(Error::Params(format!(
                        "dimension {dimension} exceeds {ENUMERATION_MAX_DIMENSION} for enumeration"
                    )));
                }
                enumerate(&basis, g.num_vars())
            }
            _ => even_subgraph(g, limit.unwrap_or(g.num_vars())),
        }
    };
    Ok(MinDistance {
        strategy: chosen,
        dimension,
        distance,
    })
}

fn support(v: &[u64], len: usize) -> Vec<usize> {
    (0..len).filter(|&i| v[i / 64] >> (i % 64) & 1 == 1).collect()
}

/// Gray-code walk over all nonzero combinations of `basis`, split on the
/// top basis vectors.
fn enumerate(basis: &[Vec<u64>], len: usize) -> Distance {
    let k = basis.len();
    let top = k.min(8);
    let low = k - top;
    let words = basis[0].len();
    let best = (0u64..1 << top)
        .into_par_iter()
        .filter_map(|prefix| {
            let mut cur = vec![0u64; words];
            for t in 0..top {
                if prefix >> t & 1 == 1 {
                    for (c, b) in cur.iter_mut().zip(&basis[low + t]) {
                        *c ^= b;
                    }
                }
            }
            let mut best: Option<(u32, Vec<u64>)> = None;
            let weight = |v: &[u64]| v.iter().map(|w| w.count_ones()).sum::<u32>();
            if prefix != 0 {
                best = Some((weight(&cur), cur.clone()));
            }
            for i in 1u64..1 << low {
                let flip = &basis[i.trailing_zeros() as usize];
                for (c, b) in cur.iter_mut().zip(flip) {
                    *c ^= b;
                }
                let w = weight(&cur);
                if best.as_ref().is_none_or(|(bw, _)| w < *bw) {
                    best = Some((w, cur.clone()));
                }
            }
            best
        })
        .collect::<Vec<_>>()
        .into_iter()
        .min_by_key(|(w, _)| *w)
        .expect("nonzero dimension has a nonzero codeword");
    Distance::Exact {
        value: best.0 as usize,
        witness: support(&best.1, len),
    }
}

struct EvenSearch<'a> {
    g: &'a TannerGraph,
    max_deg: usize,
    members: Vec<usize>,
    in_set: Vec<bool>,
    banned: Vec<bool>,
    parity: Vec<bool>,
    odd: usize,
    /// Best weight so far in this branch family, and its codeword.
    best: usize,
    witness: Option<Vec<usize>>,
}

impl EvenSearch<'_> {
    fn toggle(&mut self, v: usize) {
        self.in_set[v] = !self.in_set[v];
        for &c in self.g.var_neighbours(v) {
            self.parity[c] = !self.parity[c];
            if self.parity[c] {
                self.odd += 1;
            } else {
                self.odd -= 1;
            }
        }
    }

    fn first_odd(&self) -> Option<usize> {
        self.members
            .iter()
            .flat_map(|&v| self.g.var_neighbours(v))
            .copied()
            .filter(|&c| self.parity[c])
            .min()
    }

    /// Every codeword containing the current set is reached once: the
    /// smallest odd check gains one of its neighbours, and siblings exclude
    /// the neighbours already tried.
    fn run(&mut self, global: &AtomicUsize) {
        let lower = self.members.len() + self.odd.div_ceil(self.max_deg.max(1));
        if lower >= self.best || lower > global.load(Ordering::Relaxed) {
            return;
        }
        let Some(c) = self.first_odd() else {
            self.best = self.members.len();
            let mut w = self.members.clone();
            w.sort_unstable();
            self.witness = Some(w);
            global.fetch_min(self.best, Ordering::Relaxed);
            return;
        };
        let mut tried = Vec::new();
        for &v in self.g.check_neighbours(c) {
            if self.in_set[v] || self.banned[v] {
                continue;
            }
            self.toggle(v);
            self.members.push(v);
            self.run(global);
            self.members.pop();
            self.toggle(v);
            self.banned[v] = true;
            tried.push(v);
        }
        for v in tried {
            self.banned[v] = false;
        }
    }
}

/// Searches nonzero codewords of weight at most `limit`. Under the cyclic
/// automorphism every codeword has a rotation containing the representative
/// of its lowest orbit class, so only those rotations are searched.
fn even_subgraph(g: &TannerGraph, limit: usize) -> Distance {
    let global = AtomicUsize::new(limit);
    let seeds = g.orbit_representatives();
    let results: Vec<Option<(usize, Vec<usize>)>> = seeds
        .par_iter()
        .map(|&r| {
            let class = g.orbit_class(r);
            let mut s = EvenSearch {
                g,
                max_deg: g.max_var_degree(),
                members: vec![r],
                in_set: vec![false; g.num_vars()],
                banned: (0..g.num_vars()).map(|v| g.orbit_class(v) < class).collect(),
                parity: vec![false; g.num_checks()],
                odd: 0,
                best: limit + 1,
                witness: None,
            };
            s.toggle(r);
            s.run(&global);
            s.witness.map(|w| (s.best, w))
        })
        .collect();
    match results.into_iter().flatten().min_by_key(|(w, _)| *w) {
        Some((value, witness)) => Distance::Exact { value, witness },
        None => Distance::AboveLimit { limit },
    }
}
