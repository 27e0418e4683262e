//! Algebraic conditions for freedom from 8-cycles with a chord.
//!
//! In a 4-cycle-free graph an 8-cycle has a chord exactly when two 6-cycles
//! meet in a single v-c-v path. On the exponent matrix such a path is a
//! [`Term`]: two edges of one row.

use std::collections::{BTreeMap, BTreeSet};
use std::ops::ControlFlow;

use serde::Serialize;

use crate::cycles::{self, CycleWalk, EdgeRef, Term};
use crate::error::{Error, Result};
use crate::matrix::ExponentMatrix;

/// Signed column pairs of the six 6-cycles of a 3x3 submatrix: entry
/// `[m][r] = (a, b)` contributes `B[i_r][j_a] - B[i_r][j_b]` to `e_m`.
const SIX_CYCLES: [[(usize, usize); 3]; 6] = [
    [(0, 1), (1, 2), (2, 0)],
    [(0, 2), (2, 1), (1, 0)],
    [(1, 2), (2, 0), (0, 1)],
    [(2, 1), (1, 0), (0, 2)],
    [(2, 0), (0, 1), (1, 2)],
    [(1, 0), (0, 2), (2, 1)],
];

/// Pairs of entries (1-based) whose 6-cycles share a term.
pub const FORBIDDEN_PAIRS: [(usize, usize); 9] = [
    (1, 6),
    (1, 2),
    (1, 4),
    (2, 5),
    (2, 3),
    (3, 4),
    (3, 6),
    (4, 5),
    (5, 6),
];

/// Residues of the six 6-cycles of one 3x3 single-edge submatrix.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct SixEntryVector {
    pub rows: [usize; 3],
    pub cols: [usize; 3],
    pub entries: [u32; 6],
}

impl SixEntryVector {
    /// Evaluates the six sums on a 3x3 array of shifts.
    pub fn from_shifts(rows: [usize; 3], cols: [usize; 3], s: &[[u32; 3]; 3], n: u32) -> Self {
        let mut entries = [0u32; 6];
        for (m, terms) in SIX_CYCLES.iter().enumerate() {
            let mut acc = 0i64;
            for (r, &(a, b)) in terms.iter().enumerate() {
                acc += s[r][a] as i64 - s[r][b] as i64;
            }
            entries[m] = acc.rem_euclid(n as i64) as u32;
        }
        Self {
            rows,
            cols,
            entries,
        }
    }

    /// Entry `m`, 1-based.
    pub fn entry(&self, m: usize) -> u32 {
        self.entries[m - 1]
    }

    /// 1-based positions of the zero entries.
    pub fn zeros(&self) -> Vec<usize> {
        (1..=6).filter(|&m| self.entry(m) == 0).collect()
    }

    /// The 6-cycle of entry `m` as a walk on the full matrix.
    pub fn walk(&self, m: usize) -> CycleWalk {
        let cols: Vec<usize> = SIX_CYCLES[m - 1].iter().map(|&(a, _)| self.cols[a]).collect();
        CycleWalk::single_edge(&self.rows, &cols).expect("six-cycle pattern is a valid walk")
    }
}

/// `None` when one of the nine cells is empty.
pub fn six_entry_vector(
    b: &ExponentMatrix,
    rows: [usize; 3],
    cols: [usize; 3],
) -> Result<Option<SixEntryVector>> {
    distinct3(rows, "rows")?;
    distinct3(cols, "columns")?;
    let mut s = [[0u32; 3]; 3];
    for r in 0..3 {
        for c in 0..3 {
            if rows[r] >= b.rows() || cols[c] >= b.cols() {
                return Err(Error::Invalid(format!(
                    "cell ({},{}) outside the matrix",
                    rows[r], cols[c]
                )));
            }
            match b.cell(rows[r], cols[c]) {
                [] => return Ok(None),
                [x] => s[r][c] = *x,
                _ => {
                    return Err(Error::Invalid(format!(
                        "cell ({},{}) has multiple edges",
                        rows[r], cols[c]
                    )))
                }
            }
        }
    }
    Ok(Some(SixEntryVector::from_shifts(
        rows,
        cols,
        &s,
        b.lifting() as u32,
    )))
}

fn distinct3(x: [usize; 3], what: &str) -> Result<()> {
    if x[0] == x[1] || x[0] == x[2] || x[1] == x[2] {
        return Err(Error::Invalid(format!("{what} {x:?} are not distinct")));
    }
    Ok(())
}

/// First violated forbidden pair, as an index `1..=9` into [`FORBIDDEN_PAIRS`].
pub fn check_vector(v: &SixEntryVector) -> Option<usize> {
    FORBIDDEN_PAIRS
        .iter()
        .position(|&(x, y)| v.entry(x) == 0 && v.entry(y) == 0)
        .map(|p| p + 1)
}

/// `Ok(None)` is a pass, including submatrices with an empty cell.
pub fn check_3x3(b: &ExponentMatrix, rows: [usize; 3], cols: [usize; 3]) -> Result<Option<usize>> {
    Ok(six_entry_vector(b, rows, cols)?.and_then(|v| check_vector(&v)))
}

/// Row-indexed unordered column pairs of one zero 6-cycle; `None` off the
/// three active rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ColumnIndexVector(pub Vec<Option<(usize, usize)>>);

impl ColumnIndexVector {
    /// First row position where both vectors hold the same pair.
    pub fn common_pair(&self, other: &ColumnIndexVector) -> Option<(usize, (usize, usize))> {
        self.0
            .iter()
            .zip(&other.0)
            .enumerate()
            .find_map(|(r, (a, b))| match (a, b) {
                (Some(x), Some(y)) if x == y => Some((r, *x)),
                _ => None,
            })
    }
}

fn unordered(a: usize, b: usize) -> (usize, usize) {
    (a.min(b), a.max(b))
}

/// Column-index vector of entry `m` (1-based) for a matrix with `c` rows.
pub fn column_index_vector(v: &SixEntryVector, m: usize, c: usize) -> Result<ColumnIndexVector> {
    if !(1..=6).contains(&m) {
        return Err(Error::Invalid(format!("entry index {m} not in 1..=6")));
    }
    if v.entry(m) != 0 {
        return Err(Error::Invalid(format!(
            "entry e{m} = {} is not zero",
            v.entry(m)
        )));
    }
    if v.rows.iter().any(|&r| r >= c) {
        return Err(Error::Invalid(format!("rows {:?} exceed {c}", v.rows)));
    }
    let mut out = vec![None; c];
    for (r, &(a, b)) in SIX_CYCLES[m - 1].iter().enumerate() {
        out[v.rows[r]] = Some(unordered(v.cols[a], v.cols[b]));
    }
    Ok(ColumnIndexVector(out))
}

/// Two zero entries from different 3x3 parts of a 3x4 submatrix whose
/// column-index vectors agree somewhere.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness3x4 {
    pub first: (SixEntryVector, usize),
    pub second: (SixEntryVector, usize),
    pub row: usize,
    pub columns: (usize, usize),
}

pub fn check_3x4(b: &ExponentMatrix, rows: [usize; 3], cols: [usize; 4]) -> Result<Option<Witness3x4>> {
    let triples = [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    let mut zeros: Vec<(usize, SixEntryVector, usize, ColumnIndexVector)> = Vec::new();
    for (t, tri) in triples.iter().enumerate() {
        let sub = [cols[tri[0]], cols[tri[1]], cols[tri[2]]];
        let Some(v) = six_entry_vector(b, rows, sub)? else {
            continue;
        };
        for m in v.zeros() {
            zeros.push((t, v, m, column_index_vector(&v, m, b.rows())?));
        }
    }
    for (p, (t1, v1, m1, c1)) in zeros.iter().enumerate() {
        for (t2, v2, m2, c2) in &zeros[p + 1..] {
            if t1 == t2 {
                continue;
            }
            if let Some((row, columns)) = c1.common_pair(c2) {
                return Ok(Some(Witness3x4 {
                    first: (*v1, *m1),
                    second: (*v2, *m2),
                    row,
                    columns,
                }));
            }
        }
    }
    Ok(None)
}

/// Two zero-sum 6-cycle walks through the same term, both read starting at
/// that term.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChordWitness {
    pub first: CycleWalk,
    pub second: CycleWalk,
    pub term: Term,
    pub row: usize,
    pub columns: (usize, usize),
    /// The walks also share the edge after or before the term, so their
    /// lifts meet in more than the path and form no 8-cycle.
    pub degenerate: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChordReport {
    pub witnesses: Vec<ChordWitness>,
}

impl ChordReport {
    /// No non-degenerate witness.
    pub fn is_free(&self) -> bool {
        self.witnesses.iter().all(|w| w.degenerate)
    }

    pub fn violations(&self) -> impl Iterator<Item = &ChordWitness> {
        self.witnesses.iter().filter(|w| !w.degenerate)
    }
}

type Rooted = [EdgeRef; 6];

/// Readings of a length-6 walk starting at each of its terms, oriented so
/// the term's smaller edge comes first. Distinct readings at one term are
/// distinct lifted 6-cycles through a fixed lift of that term.
fn rooted_readings(w: &CycleWalk) -> Vec<(Term, Rooted)> {
    let e = w.edges();
    (0..3)
        .map(|s| {
            let mut r: Rooted = std::array::from_fn(|i| e[(2 * s + i) % 6]);
            if r[0] > r[1] {
                // reverse, then rotate the term back to the front
                r = [r[1], r[0], r[5], r[4], r[3], r[2]];
            }
            (w.rotated(s).terms()[0], r)
        })
        .collect()
}

fn walk_of(r: &Rooted) -> CycleWalk {
    CycleWalk::from_edges(r.to_vec()).expect("rooted reading of a valid walk")
}

/// Zero-sum 6-cycle readings grouped by term.
fn readings_by_term(b: &ExponentMatrix) -> BTreeMap<Term, BTreeSet<Rooted>> {
    let mut map: BTreeMap<Term, BTreeSet<Rooted>> = BTreeMap::new();
    cycles::for_each_walk(b, 3, |w, sum| {
        if sum == 0 {
            for (t, r) in rooted_readings(&w) {
                map.entry(t).or_default().insert(r);
            }
        }
        ControlFlow::Continue(())
    });
    map
}

fn require_four_cycle_free(b: &ExponentMatrix) -> Result<()> {
    match cycles::find_zero_walk(b, 2) {
        Some(w) => Err(Error::Precondition(format!(
            "exponent matrix has a 4-cycle: {:?}",
            w.edges()
        ))),
        None => Ok(()),
    }
}

/// Global shared-term check for single- and multiple-edge matrices.
pub fn check_chordfree(b: &ExponentMatrix) -> Result<ChordReport> {
    require_four_cycle_free(b)?;
    let mut witnesses = Vec::new();
    for (term, set) in readings_by_term(b) {
        let list: Vec<&Rooted> = set.iter().collect();
        for (p, x) in list.iter().enumerate() {
            for y in &list[p + 1..] {
                witnesses.push(ChordWitness {
                    first: walk_of(x),
                    second: walk_of(y),
                    term,
                    row: term.row,
                    columns: term.columns(),
                    degenerate: x[2] == y[2] || x[5] == y[5],
                });
            }
        }
    }
    Ok(ChordReport { witnesses })
}

/// Verdict of [`check_chordfree`] without collecting witnesses.
pub fn is_chordfree(b: &ExponentMatrix) -> Result<bool> {
    require_four_cycle_free(b)?;
    Ok(readings_by_term(b).values().all(|set| {
        let list: Vec<&Rooted> = set.iter().collect();
        list.iter().enumerate().all(|(p, x)| {
            list[p + 1..]
                .iter()
                .all(|y| x[2] == y[2] || x[5] == y[5])
        })
    }))
}

/// Runs every 3x3 and 3x4 theorem check of a single-edge matrix; returns
/// the first failing `(rows, cols)`.
pub fn first_submatrix_failure(b: &ExponentMatrix) -> Result<Option<(Vec<usize>, Vec<usize>)>> {
    let (c, d) = (b.rows(), b.cols());
    for i1 in 0..c {
        for i2 in i1 + 1..c {
            for i3 in i2 + 1..c {
                let rows = [i1, i2, i3];
                for j1 in 0..d {
                    for j2 in j1 + 1..d {
                        for j3 in j2 + 1..d {
                            if check_3x3(b, rows, [j1, j2, j3])?.is_some() {
                                return Ok(Some((rows.to_vec(), vec![j1, j2, j3])));
                            }
                            for j4 in j3 + 1..d {
                                if check_3x4(b, rows, [j1, j2, j3, j4])?.is_some() {
                                    return Ok(Some((rows.to_vec(), vec![j1, j2, j3, j4])));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(n: usize, rows: &[Vec<u32>]) -> ExponentMatrix {
        ExponentMatrix::from_shifts(n, rows).unwrap()
    }

    #[test]
    fn six_entry_values() {
        let b = m(11, &[vec![0, 0, 0], vec![0, 1, 2], vec![0, 3, 6]]);
        let v = six_entry_vector(&b, [0, 1, 2], [0, 1, 2]).unwrap().unwrap();
        assert_eq!(v.entries, [5, 4, 10, 6, 7, 1]);
        assert_eq!(check_vector(&v), None);
        let z = m(5, &[vec![0; 3], vec![0; 3], vec![0; 3]]);
        let v = six_entry_vector(&z, [0, 1, 2], [0, 1, 2]).unwrap().unwrap();
        assert_eq!(v.entries, [0; 6]);
        assert_eq!(check_vector(&v), Some(1));
    }

    #[test]
    fn entries_match_walk_sums() {
        let b = m(13, &[vec![0, 4, 9], vec![2, 7, 1], vec![5, 3, 11], vec![0, 6, 8]]);
        let v = six_entry_vector(&b, [3, 0, 2], [2, 0, 1]).unwrap().unwrap();
        for k in 1..=6 {
            assert_eq!(cycles::cycle_sum(&v.walk(k), &b).unwrap(), v.entry(k));
        }
    }

    #[test]
    fn forbidden_pairs_are_the_term_sharing_pairs() {
        let b = m(7, &[vec![0; 3], vec![0; 3], vec![0; 3]]);
        let v = six_entry_vector(&b, [0, 1, 2], [0, 1, 2]).unwrap().unwrap();
        let mut sharing = Vec::new();
        for x in 1..=6 {
            for y in x + 1..=6 {
                let (tx, ty) = (v.walk(x).terms(), v.walk(y).terms());
                if tx.iter().any(|t| ty.contains(t)) {
                    sharing.push((x, y));
                }
            }
        }
        let mut expected = FORBIDDEN_PAIRS.to_vec();
        expected.sort();
        assert_eq!(sharing, expected);
    }

    #[test]
    fn empty_and_multi_edge_cells() {
        let b = ExponentMatrix::from_single_edge(
            7,
            &[
                vec![Some(0), Some(0), None],
                vec![Some(0), Some(1), Some(2)],
                vec![Some(0), Some(2), Some(4)],
            ],
        )
        .unwrap();
        assert_eq!(six_entry_vector(&b, [0, 1, 2], [0, 1, 2]).unwrap(), None);
        assert_eq!(check_3x3(&b, [0, 1, 2], [0, 1, 2]).unwrap(), None);
        let me = ExponentMatrix::new(7, vec![vec![vec![0, 1]; 3]; 3]).unwrap();
        assert!(six_entry_vector(&me, [0, 1, 2], [0, 1, 2]).is_err());
        assert!(six_entry_vector(&b, [0, 0, 2], [0, 1, 2]).is_err());
    }

    #[test]
    fn column_index_vectors() {
        let z = m(5, &vec![vec![0; 5]; 4]);
        let v = six_entry_vector(&z, [0, 1, 2], [1, 3, 4]).unwrap().unwrap();
        assert_eq!(
            column_index_vector(&v, 1, 4).unwrap().0,
            vec![Some((1, 3)), Some((3, 4)), Some((1, 4)), None]
        );
        assert_eq!(
            column_index_vector(&v, 3, 4).unwrap().0,
            vec![Some((3, 4)), Some((1, 4)), Some((1, 3)), None]
        );
        let v = six_entry_vector(&z, [0, 2, 3], [1, 3, 4]).unwrap().unwrap();
        let civ = column_index_vector(&v, 2, 4).unwrap();
        assert_eq!(civ.0[1], None);
        assert!(civ.0[0].is_some() && civ.0[2].is_some() && civ.0[3].is_some());
        let b = m(11, &[vec![0, 0, 0], vec![0, 1, 2], vec![0, 3, 6]]);
        let v = six_entry_vector(&b, [0, 1, 2], [0, 1, 2]).unwrap().unwrap();
        assert!(column_index_vector(&v, 1, 3).is_err());
    }

    #[test]
    fn three_by_three_failure_detected_globally() {
        // e1 = e2 = 0 on the first three columns
        let b = m(13, &[vec![0, 0, 0], vec![0, 1, 3], vec![0, 11, 2]]);
        let v = six_entry_vector(&b, [0, 1, 2], [0, 1, 2]).unwrap().unwrap();
        assert_eq!((v.entry(1), v.entry(2)), (0, 0));
        assert_eq!(check_vector(&v), Some(2));
        assert!(!check_chordfree(&b).unwrap().is_free());
        assert!(!is_chordfree(&b).unwrap());
    }

    #[test]
    fn four_cycles_are_a_precondition_error() {
        let z = m(5, &vec![vec![0; 3]; 3]);
        assert!(matches!(check_chordfree(&z), Err(Error::Precondition(_))));
    }

    #[test]
    fn single_six_cycle_of_a_double_edge_cell_is_free() {
        // (0,1) mod 3: three edge-steps of +1 close up, one lifted 6-cycle orbit
        let b = ExponentMatrix::new(3, vec![vec![vec![0, 1]]]).unwrap();
        assert!(cycles::is_four_cycle_free(&b));
        let r = check_chordfree(&b).unwrap();
        assert!(r.witnesses.is_empty());
    }
}
