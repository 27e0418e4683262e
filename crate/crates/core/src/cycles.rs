//! Algebraic cycle detection on the exponent matrix.
//!
//! A closed walk of length `2k` through the protograph alternates between a
//! column (v-node block) and a row (c-node block). It is written as a cyclic
//! sequence of protograph edges `e0 e1 ... e(2k-1)` where `e(2i)` and
//! `e(2i+1)` lie in the same row and `e(2i+1)`, `e(2i+2)` lie in the same
//! column. Consecutive edges must differ, cyclically. The walk lifts to
//! closed walks in the Tanner graph iff the alternating shift sum vanishes
//! modulo `N`.

use std::cmp::Ordering;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::ExponentMatrix;

/// A protograph edge: cell `(row, col)` and an index into its shift vector.
///
/// The derived ordering is column-major, which fixes enumeration order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct EdgeRef {
    pub col: usize,
    pub row: usize,
    pub idx: usize,
}

impl EdgeRef {
    pub fn new(row: usize, col: usize, idx: usize) -> Self {
        Self { col, row, idx }
    }

    pub fn shift(&self, b: &ExponentMatrix) -> Option<u32> {
        if self.row >= b.rows() || self.col >= b.cols() {
            return None;
        }
        b.cell(self.row, self.col).get(self.idx).copied()
    }
}

/// One step of a walk: inside row `row`, from column `from_col` (edge index
/// `from_edge`) to column `to_col` (edge index `to_edge`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Segment {
    pub row: usize,
    pub from_col: usize,
    pub to_col: usize,
    pub from_edge: usize,
    pub to_edge: usize,
}

/// Unordered pair of edges sharing a row: the v-c-v path a walk takes
/// through one check block. Identity ignores shift values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Term {
    pub row: usize,
    /// `(col, edge index)`, with `lo <= hi`.
    pub lo: (usize, usize),
    pub hi: (usize, usize),
}

impl Term {
    fn of(a: EdgeRef, b: EdgeRef) -> Self {
        debug_assert_eq!(a.row, b.row);
        let (x, y) = ((a.col, a.idx), (b.col, b.idx));
        let (lo, hi) = if x <= y { (x, y) } else { (y, x) };
        Term { row: a.row, lo, hi }
    }

    pub fn columns(&self) -> (usize, usize) {
        (self.lo.0, self.hi.0)
    }
}

/// A 6-cycle term together with its signed value `b^r - b^r'` mod `N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TermValue {
    pub term: Term,
    pub value: u32,
}

/// The three terms of a length-6 walk.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TermTriple(pub [TermValue; 3]);

impl TermTriple {
    pub fn shares_term_with(&self, other: &TermTriple) -> Option<Term> {
        self.0
            .iter()
            .find(|a| other.0.iter().any(|b| b.term == a.term))
            .map(|a| a.term)
    }
}

/// Closed walk through the protograph, stored as its edge sequence.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct CycleWalk {
    edges: Vec<EdgeRef>,
}

impl CycleWalk {
    /// Validates the alternation and non-backtracking constraints.
    pub fn from_edges(edges: Vec<EdgeRef>) -> Result<Self> {
        let len = edges.len();
        if len < 4 || !len.is_multiple_of(2) {
            return Err(Error::BadWalk(format!("length {len} is not even and >= 4")));
        }
        for p in 0..len {
            let (a, b) = (edges[p], edges[(p + 1) % len]);
            if a == b {
                return Err(Error::BadWalk(format!("edge repeated at position {p}")));
            }
            let linked = if p % 2 == 0 {
                a.row == b.row
            } else {
                a.col == b.col
            };
            if !linked {
                return Err(Error::BadWalk(format!(
                    "positions {p} and {} are not adjacent",
                    (p + 1) % len
                )));
            }
        }
        Ok(Self { edges })
    }

    /// Builds a walk from segments; closure is checked cyclically.
    pub fn from_segments(segments: &[Segment]) -> Result<Self> {
        let k = segments.len();
        for i in 0..k {
            if segments[i].to_col != segments[(i + 1) % k].from_col {
                return Err(Error::BadWalk(format!(
                    "segment {i} ends in column {} but the next starts in {}",
                    segments[i].to_col,
                    segments[(i + 1) % k].from_col
                )));
            }
        }
        Self::from_edges(
            segments
                .iter()
                .flat_map(|s| {
                    [
                        EdgeRef::new(s.row, s.from_col, s.from_edge),
                        EdgeRef::new(s.row, s.to_col, s.to_edge),
                    ]
                })
                .collect(),
        )
    }

    /// Single-edge walk through rows `rows[i]` and columns `cols[i] -> cols[i+1]`.
    pub fn single_edge(rows: &[usize], cols: &[usize]) -> Result<Self> {
        if rows.len() != cols.len() {
            return Err(Error::BadWalk("rows and columns differ in length".into()));
        }
        let k = rows.len();
        let segs: Vec<Segment> = (0..k)
            .map(|i| Segment {
                row: rows[i],
                from_col: cols[i],
                to_col: cols[(i + 1) % k],
                from_edge: 0,
                to_edge: 0,
            })
            .collect();
        Self::from_segments(&segs)
    }

    pub fn edges(&self) -> &[EdgeRef] {
        &self.edges
    }

    /// Walk length `2k`.
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn half_len(&self) -> usize {
        self.edges.len() / 2
    }

    pub fn segments(&self) -> Vec<Segment> {
        self.edges
            .chunks(2)
            .map(|p| Segment {
                row: p[0].row,
                from_col: p[0].col,
                to_col: p[1].col,
                from_edge: p[0].idx,
                to_edge: p[1].idx,
            })
            .collect()
    }

    pub fn terms(&self) -> Vec<Term> {
        self.edges.chunks(2).map(|p| Term::of(p[0], p[1])).collect()
    }

    /// Rotation by `s` segments.
    pub fn rotated(&self, s: usize) -> Self {
        let mut edges = self.edges.clone();
        edges.rotate_left((2 * s) % self.edges.len());
        Self { edges }
    }

    /// The same walk traversed backwards.
    pub fn reflected(&self) -> Self {
        let mut edges = self.edges.clone();
        edges.reverse();
        Self { edges }
    }

    /// Lexicographically smallest edge sequence among all rotations and
    /// reflections.
    pub fn canonical(&self) -> Self {
        Self {
            edges: canonical_edges(&self.edges),
        }
    }

    pub fn is_canonical(&self) -> bool {
        is_canonical(&self.edges)
    }

    /// Checks that every edge exists in `b`.
    pub fn check_against(&self, b: &ExponentMatrix) -> Result<()> {
        for e in &self.edges {
            if e.row >= b.rows() || e.col >= b.cols() {
                return Err(Error::BadWalk(format!(
                    "cell ({},{}) outside the matrix",
                    e.row, e.col
                )));
            }
            let cell = b.cell(e.row, e.col);
            if cell.is_empty() {
                return Err(Error::BadWalk(format!(
                    "cell ({},{}) is empty",
                    e.row, e.col
                )));
            }
            if e.idx >= cell.len() {
                return Err(Error::BadWalk(format!(
                    "edge index {} out of range in cell ({},{})",
                    e.idx, e.row, e.col
                )));
            }
        }
        Ok(())
    }

    /// Terms with their values for a length-6 walk.
    pub fn term_triple(&self, b: &ExponentMatrix) -> Result<TermTriple> {
        if self.half_len() != 3 {
            return Err(Error::BadWalk("term triples need a length-6 walk".into()));
        }
        self.check_against(b)?;
        let n = b.lifting() as u64;
        let tv = |p: &[EdgeRef]| {
            let x = p[0].shift(b).unwrap() as u64;
            let y = p[1].shift(b).unwrap() as u64;
            TermValue {
                term: Term::of(p[0], p[1]),
                value: ((x + n - y) % n) as u32,
            }
        };
        let t: Vec<TermValue> = self.edges.chunks(2).map(tv).collect();
        Ok(TermTriple([t[0], t[1], t[2]]))
    }
}

fn rotations(edges: &[EdgeRef]) -> impl Iterator<Item = Vec<EdgeRef>> + '_ {
    let len = edges.len();
    let rev: Vec<EdgeRef> = edges.iter().rev().copied().collect();
    (0..len / 2).flat_map(move |s| {
        let mut a = edges.to_vec();
        a.rotate_left(2 * s);
        let mut b = rev.clone();
        b.rotate_left(2 * s);
        [a, b]
    })
}

fn canonical_edges(edges: &[EdgeRef]) -> Vec<EdgeRef> {
    rotations(edges).min().unwrap()
}

fn is_canonical(edges: &[EdgeRef]) -> bool {
    rotations(edges).all(|r| r.as_slice().cmp(edges) != Ordering::Less)
}

/// `sum_i (b[e(2i)] - b[e(2i+1)]) mod N`.
pub fn cycle_sum(walk: &CycleWalk, b: &ExponentMatrix) -> Result<u32> {
    walk.check_against(b)?;
    let n = b.lifting() as i64;
    let s: i64 = walk
        .edges
        .chunks(2)
        .map(|p| p[0].shift(b).unwrap() as i64 - p[1].shift(b).unwrap() as i64)
        .sum();
    Ok(s.rem_euclid(n) as u32)
}

/// Edge-indexed view of the protograph used by the walk searches.
pub(crate) struct Protograph {
    pub edges: Vec<EdgeRef>,
    pub shifts: Vec<u32>,
    by_row: Vec<Vec<usize>>,
    by_col: Vec<Vec<usize>>,
    lifting: u32,
}

impl Protograph {
    pub fn new(b: &ExponentMatrix) -> Self {
        let mut edges = Vec::with_capacity(b.edge_count());
        for j in 0..b.cols() {
            for i in 0..b.rows() {
                for idx in 0..b.cell(i, j).len() {
                    edges.push(EdgeRef::new(i, j, idx));
                }
            }
        }
        let shifts = edges.iter().map(|e| e.shift(b).unwrap()).collect();
        let mut by_row = vec![Vec::new(); b.rows()];
        let mut by_col = vec![Vec::new(); b.cols()];
        for (id, e) in edges.iter().enumerate() {
            by_row[e.row].push(id);
            by_col[e.col].push(id);
        }
        Self {
            edges,
            shifts,
            by_row,
            by_col,
            lifting: b.lifting() as u32,
        }
    }

    /// Visits every closed walk of length `2k` whose first edge is its
    /// smallest edge id, starting from edges `>= first`. The callback gets
    /// the edge ids and the residue of the walk.
    fn walks_from<F>(&self, k: usize, start: usize, f: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize], u32) -> ControlFlow<()>,
    {
        let mut path = Vec::with_capacity(2 * k);
        path.push(start);
        self.extend(k, start, &mut path, self.shifts[start], f)
    }

    fn extend<F>(
        &self,
        k: usize,
        start: usize,
        path: &mut Vec<usize>,
        acc: u32,
        f: &mut F,
    ) -> ControlFlow<()>
    where
        F: FnMut(&[usize], u32) -> ControlFlow<()>,
    {
        let p = path.len();
        let cur = *path.last().unwrap();
        let e = self.edges[cur];
        let n = self.lifting;
        // an even-position edge is followed within its row, an odd one within its column
        let candidates = if p % 2 == 1 {
            &self.by_row[e.row]
        } else {
            &self.by_col[e.col]
        };
        for &next in candidates {
            if next < start || next == cur {
                continue;
            }
            let s = self.shifts[next];
            let acc2 = if p % 2 == 1 {
                (acc + n - s) % n
            } else {
                (acc + s) % n
            };
            if p + 1 == 2 * k {
                let first = self.edges[start];
                if next != start && self.edges[next].col == first.col {
                    path.push(next);
                    let r = f(path, acc2);
                    path.pop();
                    r?;
                }
                continue;
            }
            path.push(next);
            let r = self.extend(k, start, path, acc2, f);
            path.pop();
            r?;
        }
        ControlFlow::Continue(())
    }

    pub fn for_each_walk<F>(&self, k: usize, mut f: F)
    where
        F: FnMut(&[usize], u32) -> ControlFlow<()>,
    {
        for start in 0..self.edges.len() {
            if self.walks_from(k, start, &mut f).is_break() {
                return;
            }
        }
    }

    pub fn has_zero_walk(&self, k: usize) -> bool {
        let mut found = false;
        self.for_each_walk(k, |_, r| {
            if r == 0 {
                found = true;
                ControlFlow::Break(())
            } else {
                ControlFlow::Continue(())
            }
        });
        found
    }

    pub fn to_walk(&self, ids: &[usize]) -> CycleWalk {
        CycleWalk {
            edges: ids.iter().map(|&i| self.edges[i]).collect(),
        }
    }
}

/// Visits one representative per rotation/reflection class of closed walks
/// of length `2k`, in column-major order of their smallest edge. The
/// callback receives the canonical walk and its residue.
pub fn for_each_walk<F>(b: &ExponentMatrix, k: usize, mut f: F)
where
    F: FnMut(CycleWalk, u32) -> ControlFlow<()>,
{
    if k < 2 {
        return;
    }
    let pg = Protograph::new(b);
    pg.for_each_walk(k, |ids, r| {
        let w = pg.to_walk(ids);
        if w.is_canonical() {
            f(w, r)
        } else {
            ControlFlow::Continue(())
        }
    });
}

/// All walk classes of length `2k`, canonical representatives.
pub fn enumerate_walks(b: &ExponentMatrix, k: usize) -> Vec<CycleWalk> {
    let mut out = Vec::new();
    for_each_walk(b, k, |w, _| {
        out.push(w);
        ControlFlow::Continue(())
    });
    out
}

/// Walk classes of length `2k` whose residue is zero.
pub fn zero_sum_walks(b: &ExponentMatrix, k: usize) -> Vec<CycleWalk> {
    let mut out = Vec::new();
    for_each_walk(b, k, |w, r| {
        if r == 0 {
            out.push(w);
        }
        ControlFlow::Continue(())
    });
    out
}

/// First zero-sum walk of length `2k`, if any.
pub fn find_zero_walk(b: &ExponentMatrix, k: usize) -> Option<CycleWalk> {
    if k < 2 {
        return None;
    }
    let pg = Protograph::new(b);
    let mut hit = None;
    pg.for_each_walk(k, |ids, r| {
        if r == 0 {
            hit = Some(pg.to_walk(ids).canonical());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    hit
}

pub fn is_four_cycle_free(b: &ExponentMatrix) -> bool {
    !Protograph::new(b).has_zero_walk(2)
}

/// Result of an algebraic girth computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "value", rename_all = "snake_case")]
pub enum GirthBound {
    Exact(usize),
    /// No cycle up to the cap; the girth is at least this value.
    AtLeast(usize),
}

impl GirthBound {
    pub fn exact(self) -> Option<usize> {
        match self {
            GirthBound::Exact(g) => Some(g),
            GirthBound::AtLeast(_) => None,
        }
    }
}

pub const DEFAULT_GIRTH_CAP: usize = 12;

/// Smallest `2k <= cap` admitting a zero-sum walk.
pub fn algebraic_girth(b: &ExponentMatrix, cap: usize) -> GirthBound {
    let pg = Protograph::new(b);
    for k in 2..=cap / 2 {
        if pg.has_zero_walk(k) {
            return GirthBound::Exact(2 * k);
        }
    }
    GirthBound::AtLeast(cap / 2 * 2 + 2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn zero2x2() -> ExponentMatrix {
        ExponentMatrix::from_shifts(5, &[vec![0, 0], vec![0, 0]]).unwrap()
    }

    fn compact35_cols012() -> ExponentMatrix {
        ExponentMatrix::from_shifts(11, &[vec![0, 0, 0], vec![0, 1, 2], vec![0, 3, 6]]).unwrap()
    }

    #[test]
    fn zero_matrix_four_cycle() {
        let w = CycleWalk::single_edge(&[0, 1], &[0, 1]).unwrap();
        assert_eq!(cycle_sum(&w, &zero2x2()).unwrap(), 0);
        assert_eq!(algebraic_girth(&zero2x2(), 12), GirthBound::Exact(4));
    }

    #[test]
    fn six_cycle_sum_hand_value() {
        // (0-0) + (1-2) + (6-0) = 5
        let w = CycleWalk::single_edge(&[0, 1, 2], &[0, 1, 2]).unwrap();
        assert_eq!(cycle_sum(&w, &compact35_cols012()).unwrap(), 5);
    }

    #[test]
    fn doubled_four_cycle_gives_eight() {
        let b = ExponentMatrix::from_shifts(2, &[vec![0, 0], vec![0, 1]]).unwrap();
        let w = CycleWalk::single_edge(&[0, 1, 0, 1], &[0, 1, 0, 1]).unwrap();
        assert_eq!(cycle_sum(&w, &b).unwrap(), 0);
        assert_eq!(algebraic_girth(&b, 12), GirthBound::Exact(8));
    }

    #[test]
    fn walk_structure_enforced() {
        assert!(CycleWalk::single_edge(&[0, 0], &[0, 1]).is_err());
        assert!(CycleWalk::single_edge(&[0, 1], &[0, 0]).is_err());
        let seg = Segment {
            row: 0,
            from_col: 0,
            to_col: 1,
            from_edge: 0,
            to_edge: 0,
        };
        assert!(CycleWalk::from_segments(&[seg, seg]).is_err());
    }

    #[test]
    fn empty_cell_is_structural_error() {
        let b = ExponentMatrix::from_single_edge(
            5,
            &[vec![Some(0), Some(0)], vec![Some(0), None]],
        )
        .unwrap();
        let w = CycleWalk::single_edge(&[0, 1], &[0, 1]).unwrap();
        assert!(matches!(cycle_sum(&w, &b), Err(Error::BadWalk(_))));
    }

    #[test]
    fn full_3x3_has_six_classes() {
        let walks = enumerate_walks(&compact35_cols012(), 3);
        assert_eq!(walks.len(), 6);
        assert!(walks.iter().all(|w| w.canonical() == *w));
    }

    #[test]
    fn two_by_two_has_no_six_walks() {
        assert!(enumerate_walks(&zero2x2(), 3).is_empty());
    }

    #[test]
    fn enumeration_is_deterministic() {
        let b = compact35_cols012();
        assert_eq!(enumerate_walks(&b, 4), enumerate_walks(&b, 4));
    }

    #[test]
    fn rotation_and_reflection() {
        let b = ExponentMatrix::from_shifts(13, &[vec![0, 0, 0], vec![0, 1, 5], vec![0, 4, 7]])
            .unwrap();
        let n = 13;
        for w in enumerate_walks(&b, 3).into_iter().chain(enumerate_walks(&b, 4)) {
            let s = cycle_sum(&w, &b).unwrap();
            for r in 0..w.half_len() {
                assert_eq!(cycle_sum(&w.rotated(r), &b).unwrap(), s);
            }
            assert_eq!(cycle_sum(&w.reflected(), &b).unwrap(), (n - s) % n);
            assert_eq!(w.reflected().canonical(), w);
        }
    }

    #[test]
    fn triple_edge_cell_telescopes() {
        // perfect difference sets mod 7, so no 4-cycles
        for shifts in [vec![0, 1, 3], vec![0, 2, 3], vec![0, 1, 5]] {
            let b = ExponentMatrix::new(7, vec![vec![shifts]]).unwrap();
            let walks = enumerate_walks(&b, 3);
            let alternating: Vec<&CycleWalk> = walks
                .iter()
                .filter(|w| {
                    let idx: Vec<usize> = w.edges().iter().map(|e| e.idx).collect();
                    idx[0..3] == idx[3..6] && idx[0] != idx[1] && idx[1] != idx[2] && idx[0] != idx[2]
                })
                .collect();
            assert_eq!(alternating.len(), 1);
            assert_eq!(cycle_sum(alternating[0], &b).unwrap(), 0);
            assert_eq!(algebraic_girth(&b, 12), GirthBound::Exact(6));
        }
    }

    #[test]
    fn cap_reported_when_no_cycle() {
        let b = ExponentMatrix::from_shifts(7, &[vec![0, 1, 2]]).unwrap();
        assert_eq!(algebraic_girth(&b, 12), GirthBound::AtLeast(14));
    }

    #[test]
    fn term_triple_values() {
        let b = compact35_cols012();
        let w = CycleWalk::single_edge(&[0, 1, 2], &[0, 1, 2]).unwrap();
        let t = w.term_triple(&b).unwrap();
        let vals: Vec<u32> = t.0.iter().map(|x| x.value).collect();
        assert_eq!(vals, vec![0, 10, 6]);
        assert_eq!(t.0[2].term.columns(), (0, 2));
    }
}
