//! Size bounds for elementary trapping sets and minimum distance in codes
//! of girth 6 free of 8-cycles with a chord.

use serde::Serialize;

/// Most edges a triangle-edge-disjoint VN graph on `a` vertices can have:
/// `floor(a^3 / (4a - 3))`.
pub fn edge_bound(a: usize) -> usize {
    if a == 0 {
        return 0;
    }
    a.pow(3) / (4 * a - 3)
}

/// Smallest `b` an `(a, b)` ETS can have in a `gamma`-regular code of
/// girth 6 free of 8-cycles-wc, clamped at 0.
pub fn b_lower_bound(a: usize, gamma: usize) -> usize {
    (a * gamma).saturating_sub(2 * edge_bound(a))
}

/// Tabulated lower bounds on `a` for `b = 0..=gamma`; `None` is a blank
/// entry.
pub const BOUND_TABLE: [(usize, &[Option<usize>]); 4] = [
    (3, &[Some(6), Some(7), Some(6), Some(5)]),
    (4, &[Some(8), None, Some(8), None, Some(7)]),
    (5, &[Some(10), Some(11), Some(10), Some(11), Some(10), Some(9)]),
    (6, &[Some(12), None, Some(12), None, Some(12), None, Some(11)]),
];

/// Table entry for `(gamma, b)`: `None` when not tabulated, `Some(None)`
/// for a blank entry.
pub fn table_entry(gamma: usize, b: usize) -> Option<Option<usize>> {
    BOUND_TABLE
        .iter()
        .find(|(g, _)| *g == gamma)
        .and_then(|(_, row)| row.get(b).copied())
}

/// Smallest `a > b` with `a >= 2*gamma - 2`, `a*gamma - b` even and
/// `b >= b_lower_bound(a, gamma)`. `None` if parity rules out every `a`.
pub fn analytic_min_a(gamma: usize, b: usize) -> Option<usize> {
    let start = (b + 1).max((2 * gamma).saturating_sub(2)).max(1);
    // b_lower_bound eventually hits 0 since edge_bound grows like a^2 / 4
    (start..start + 8 * gamma + 64)
        .find(|&a| (a * gamma - b).is_multiple_of(2) && b_lower_bound(a, gamma) <= b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum BoundSource {
    Table,
    Analytic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MinA {
    /// `None` where the table is blank or parity forbids the class.
    pub value: Option<usize>,
    pub source: BoundSource,
    /// The analytic bound alone.
    pub formula: Option<usize>,
    /// The tabulated value is above the analytic bound (refined by case
    /// analysis).
    pub refined: bool,
}

/// Lower bound on the size of an `(a, b)` ETS with `b < a`. For an
/// irregular code pass the minimum v-node degree as `gamma`.
pub fn min_a(gamma: usize, b: usize) -> MinA {
    let formula = analytic_min_a(gamma, b);
    match table_entry(gamma, b) {
        Some(value) => MinA {
            value,
            source: BoundSource::Table,
            formula,
            refined: matches!((value, formula), (Some(v), Some(f)) if v > f),
        },
        None => MinA {
            value: formula,
            source: BoundSource::Analytic,
            formula,
            refined: false,
        },
    }
}

/// Lower bound on minimum distance. `chordfree_len` is the largest length
/// up to which cycles are known to have no chord (0 if unknown).
pub fn dmin_bound(gamma: usize, girth: usize, chordfree_len: usize) -> usize {
    if girth >= 8 && gamma == 3 && chordfree_len >= 12 {
        10
    } else if girth >= 6 && chordfree_len >= 8 {
        2 * gamma
    } else {
        gamma + 1
    }
}
