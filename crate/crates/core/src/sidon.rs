//! Sidon sets modulo `m`: all sums `s_i + s_j` with `i <= j` are distinct.

use std::collections::BTreeSet;

/// Distinct values of `s_i + s_j mod m` over `i <= j`.
pub fn pair_sums(set: &[u32], m: u32) -> BTreeSet<u32> {
    let mut out = BTreeSet::new();
    for (i, &x) in set.iter().enumerate() {
        for &y in &set[i..] {
            out.insert(((x as u64 + y as u64) % m as u64) as u32);
        }
    }
    out
}

/// `true` iff the `C(k+1, 2)` sums over `i <= j` are pairwise distinct.
pub fn is_sidon(set: &[u32], m: u32) -> bool {
    let k = set.len();
    m > 0 && pair_sums(set, m).len() == k * (k + 1) / 2
}
