//! Searches for single-edge exponent matrices of girth 6 without 8-cycles
//! with a chord, at the smallest lifting degree in a range.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::chord::{check_3x3, check_3x4, check_chordfree};
use crate::compact::{build_unchecked, corollary_unchecked, CompactSpec};
use crate::cycles::{algebraic_girth, is_four_cycle_free, GirthBound, DEFAULT_GIRTH_CAP};
use crate::error::{Error, Result};
use crate::matrix::ExponentMatrix;
use crate::tanner::{count_8wc, TannerGraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SearchMode {
    Compact,
    General,
}

/// Which pairs of 6-cycles count as a violation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Criterion {
    /// Any two 6-cycles meeting in one v-c-v path.
    Global,
    /// Only 6-cycles on the same three rows (the 3x3 and 3x4 checks).
    Band,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchConfig {
    pub gamma: usize,
    pub n: usize,
    pub lifting_min: usize,
    pub lifting_max: usize,
    pub mode: SearchMode,
    pub criterion: Criterion,
    /// Compact mode only: also demand the corollary condition.
    pub require_corollary: bool,
    /// Zero means the rayon default.
    pub workers: usize,
    #[serde(skip)]
    pub budget: Option<Duration>,
    /// Run the Tanner-graph oracle on the result.
    pub oracle: bool,
}

impl SearchConfig {
    pub fn new(gamma: usize, n: usize, lifting_max: usize, mode: SearchMode) -> Self {
        Self {
            gamma,
            n,
            lifting_min: 2,
            lifting_max,
            mode,
            criterion: Criterion::Global,
            require_corollary: false,
            workers: 0,
            budget: None,
            oracle: true,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.gamma < 2 {
            return Err(Error::Params(format!("gamma must be >= 2, got {}", self.gamma)));
        }
        if self.n < self.gamma {
            return Err(Error::Params(format!(
                "n = {} is below gamma = {}",
                self.n, self.gamma
            )));
        }
        if self.lifting_min > self.lifting_max {
            return Err(Error::Params(format!(
                "empty lifting range {}..={}",
                self.lifting_min, self.lifting_max
            )));
        }
        if self.gamma > 255 || self.n > 255 {
            return Err(Error::Params("dimensions above 255 are not supported".into()));
        }
        Ok(())
    }
}

/// Outcome of the search at one lifting degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LiftingStatus {
    pub lifting: usize,
    /// Every candidate was ruled out.
    pub exhausted: bool,
    /// Search-tree nodes visited; only reported for exhausted degrees,
    /// where it does not depend on the worker count.
    pub nodes: Option<u64>,
}

/// Results of every check on a found matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Certificate {
    pub lifting: usize,
    pub four_cycle_free: bool,
    /// Compact matrices only.
    pub corollary_holds: Option<bool>,
    pub failing_3x3: usize,
    pub failing_3x4: usize,
    pub chordfree: bool,
    pub algebraic_girth: GirthBound,
    pub oracle_girth: Option<usize>,
    pub oracle_8wc_pairs: Option<usize>,
}

impl Certificate {
    /// True when every recorded check holds, including the oracle when run.
    /// The corollary is only sufficient, so it is not part of the verdict.
    pub fn holds(&self) -> bool {
        self.four_cycle_free
            && self.failing_3x3 == 0
            && self.failing_3x4 == 0
            && self.chordfree
            && self.oracle_girth.is_none_or(|g| g >= 6)
            && self.oracle_8wc_pairs.is_none_or(|p| p == 0)
    }
}

/// Counts failing 3x3 and 3x4 submatrices over all row triples.
pub fn count_submatrix_failures(b: &ExponentMatrix) -> Result<(usize, usize)> {
    let (c, d) = (b.rows(), b.cols());
    let (mut f3, mut f4) = (0, 0);
    for i1 in 0..c {
        for i2 in i1 + 1..c {
            for i3 in i2 + 1..c {
                let rows = [i1, i2, i3];
                for j1 in 0..d {
                    for j2 in j1 + 1..d {
                        for j3 in j2 + 1..d {
                            f3 += check_3x3(b, rows, [j1, j2, j3])?.is_some() as usize;
                            for j4 in j3 + 1..d {
                                f4 += check_3x4(b, rows, [j1, j2, j3, j4])?.is_some() as usize;
                            }
                        }
                    }
                }
            }
        }
    }
    Ok((f3, f4))
}

/// Runs the full check battery on a single-edge matrix.
pub fn certify(b: &ExponentMatrix, spec: Option<&CompactSpec>, oracle: bool) -> Result<Certificate> {
    if !b.is_single_edge() {
        return Err(Error::Invalid("certificates need a single-edge matrix".into()));
    }
    let four_cycle_free = is_four_cycle_free(b);
    let (failing_3x3, failing_3x4) = count_submatrix_failures(b)?;
    let chordfree = four_cycle_free && check_chordfree(b)?.is_free();
    let (oracle_girth, oracle_8wc_pairs) = if oracle {
        let g = TannerGraph::from_exponent(b);
        let pairs = if four_cycle_free { Some(count_8wc(&g)?) } else { None };
        (g.bfs_girth(), pairs)
    } else {
        (None, None)
    };
    Ok(Certificate {
        lifting: b.lifting(),
        four_cycle_free,
        corollary_holds: spec
            .map(|s| corollary_unchecked(&s.seed, &s.coefficients, s.lifting).is_none()),
        failing_3x3,
        failing_3x4,
        chordfree,
        algebraic_girth: algebraic_girth(b, DEFAULT_GIRTH_CAP),
        oracle_girth,
        oracle_8wc_pairs,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct Found {
    pub matrix: ExponentMatrix,
    pub spec: Option<CompactSpec>,
    pub certificate: Certificate,
}

#[derive(Debug, Clone, Serialize)]
pub struct SearchOutcome {
    pub config: SearchConfig,
    pub found: Option<Found>,
    pub per_lifting: Vec<LiftingStatus>,
    /// The time budget ran out before the range was settled.
    pub budget_exhausted: bool,
}

/// One 6-cycle read from a term: rows of the next two segments in reading
/// order and the column outside the term.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Reading {
    r1: u8,
    col: u8,
    r2: u8,
}

const UNSET: u32 = u32::MAX;

/// Partially assigned single-edge matrix that rejects any assignment
/// creating a 4-cycle or two 6-cycles meeting in one path.
pub(crate) struct SeState {
    c: usize,
    d: usize,
    n: u32,
    criterion: Criterion,
    cells: Vec<u32>,
    readings: Vec<Vec<Reading>>,
    log: Vec<(usize, Vec<usize>)>,
    fresh: Vec<(usize, Reading)>,
}

impl SeState {
    pub fn new(c: usize, d: usize, n: u32, criterion: Criterion) -> Self {
        Self {
            c,
            d,
            n,
            criterion,
            cells: vec![UNSET; c * d],
            readings: vec![Vec::new(); c * d * d],
            log: Vec::new(),
            fresh: Vec::new(),
        }
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> u32 {
        self.cells[i * self.d + j]
    }

    fn term_id(&self, r: usize, a: usize, b: usize) -> usize {
        (r * self.d + a.min(b)) * self.d + a.max(b)
    }

    fn clashes(&self, x: &Reading, y: &Reading) -> bool {
        let genuine = x.r1 != y.r1 && x.r2 != y.r2;
        match self.criterion {
            Criterion::Global => genuine,
            // same three rows: y's rows are x's rows swapped
            Criterion::Band => genuine && x.r1 == y.r2 && x.r2 == y.r1,
        }
    }

    /// Assigns cell `(i, j)`; on a violation leaves the state unchanged.
    pub fn place(&mut self, i: usize, j: usize, v: u32) -> bool {
        debug_assert_eq!(self.at(i, j), UNSET);
        let (c, d, n) = (self.c, self.d, self.n as u64);
        let v64 = v as u64;
        for j2 in 0..d {
            let a = self.at(i, j2);
            if j2 == j || a == UNSET {
                continue;
            }
            for i2 in 0..c {
                if i2 == i {
                    continue;
                }
                let (b, e) = (self.at(i2, j), self.at(i2, j2));
                if b == UNSET || e == UNSET {
                    continue;
                }
                if (v64 + e as u64 + 2 * n - a as u64 - b as u64).is_multiple_of(n) {
                    return false;
                }
            }
        }

        self.fresh.clear();
        for j1 in 0..d {
            let x1 = self.at(i, j1);
            if j1 == j || x1 == UNSET {
                continue;
            }
            for i1 in 0..c {
                let y1 = self.at(i1, j1);
                if i1 == i || y1 == UNSET {
                    continue;
                }
                for j2 in 0..d {
                    let y2 = self.at(i1, j2);
                    if j2 == j || j2 == j1 || y2 == UNSET {
                        continue;
                    }
                    for i2 in 0..c {
                        if i2 == i || i2 == i1 {
                            continue;
                        }
                        let (z2, z0) = (self.at(i2, j2), self.at(i2, j));
                        if z2 == UNSET || z0 == UNSET {
                            continue;
                        }
                        let s = v64 + y1 as u64 + z2 as u64 + 3 * n
                            - x1 as u64
                            - y2 as u64
                            - z0 as u64;
                        if !s.is_multiple_of(n) {
                            continue;
                        }
                        let rows = [i, i1, i2];
                        let segs = [(j, j1), (j1, j2), (j2, j)];
                        let third = [j2, j, j1];
                        for k in 0..3 {
                            let (f, t) = segs[k];
                            let (p, q) = (rows[(k + 1) % 3], rows[(k + 2) % 3]);
                            let (r1, r2) = if f < t { (p, q) } else { (q, p) };
                            let reading = Reading {
                                r1: r1 as u8,
                                col: third[k] as u8,
                                r2: r2 as u8,
                            };
                            self.fresh.push((self.term_id(rows[k], f, t), reading));
                        }
                    }
                }
            }
        }
        for (p, (t, x)) in self.fresh.iter().enumerate() {
            if self.readings[*t].iter().any(|y| self.clashes(x, y)) {
                return false;
            }
            if self.fresh[..p].iter().any(|(t2, y)| t2 == t && self.clashes(x, y)) {
                return false;
            }
        }
        let fresh = std::mem::take(&mut self.fresh);
        let mut touched = Vec::with_capacity(fresh.len());
        for &(t, x) in &fresh {
            self.readings[t].push(x);
            touched.push(t);
        }
        self.fresh = fresh;
        self.cells[i * d + j] = v;
        self.log.push((i * d + j, touched));
        true
    }

    /// Reverts the most recent successful [`place`](Self::place).
    pub fn unplace(&mut self) {
        let (cell, touched) = self.log.pop().expect("unplace without place");
        for t in touched.into_iter().rev() {
            self.readings[t].pop();
        }
        self.cells[cell] = UNSET;
    }
}

struct Budget {
    deadline: Option<Instant>,
    hit: AtomicBool,
}

impl Budget {
    fn new(limit: Option<Duration>) -> Self {
        Self {
            deadline: limit.map(|d| Instant::now() + d),
            hit: AtomicBool::new(false),
        }
    }

    fn expired(&self) -> bool {
        if self.hit.load(Ordering::Relaxed) {
            return true;
        }
        if self.deadline.is_some_and(|d| Instant::now() >= d) {
            self.hit.store(true, Ordering::Relaxed);
            return true;
        }
        false
    }
}

fn with_pool<T: Send>(workers: usize, f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::Params(format!("thread pool: {e}")))?;
    Ok(pool.install(f))
}

/// Smallest lifting degree in range with a compact matrix, and the
/// lexicographically smallest `(seed, coefficients)` there.
pub fn search_compact(cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    if cfg.mode != SearchMode::Compact {
        return Err(Error::Params("search_compact needs compact mode".into()));
    }
    let budget = Budget::new(cfg.budget);
    let gamma = cfg.gamma;
    let mut per_lifting = Vec::new();
    for lifting in cfg.lifting_min.max(3)..=cfg.lifting_max {
        let nodes = AtomicU64::new(0);
        let seeds = increasing_tuples(2, lifting as u32, gamma - 2);
        let result = with_pool(cfg.workers, || {
            seeds.par_iter().find_map_first(|tail| {
                let mut seed = vec![0, 1];
                seed.extend_from_slice(tail);
                compact_for_seed(cfg, &seed, lifting, &nodes, &budget).map(|coef| (seed, coef))
            })
        })?;
        if budget.expired() {
            per_lifting.push(LiftingStatus {
                lifting,
                exhausted: false,
                nodes: None,
            });
            return Ok(SearchOutcome {
                config: cfg.clone(),
                found: None,
                per_lifting,
                budget_exhausted: true,
            });
        }
        match result {
            Some((seed, coefficients)) => {
                per_lifting.push(LiftingStatus {
                    lifting,
                    exhausted: false,
                    nodes: None,
                });
                let spec = CompactSpec::new(seed, coefficients, lifting)?;
                let matrix = build_unchecked(&spec.seed, &spec.coefficients, lifting);
                let certificate = certify(&matrix, Some(&spec), cfg.oracle)?;
                return Ok(SearchOutcome {
                    config: cfg.clone(),
                    found: Some(Found {
                        matrix,
                        spec: Some(spec),
                        certificate,
                    }),
                    per_lifting,
                    budget_exhausted: false,
                });
            }
            None => per_lifting.push(LiftingStatus {
                lifting,
                exhausted: true,
                nodes: Some(nodes.load(Ordering::Relaxed)),
            }),
        }
    }
    Ok(SearchOutcome {
        config: cfg.clone(),
        found: None,
        per_lifting,
        budget_exhausted: false,
    })
}

/// All strictly increasing `len`-tuples from `lo..hi`, in lexicographic order.
fn increasing_tuples(lo: u32, hi: u32, len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(lo: u32, hi: u32, len: usize, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let need = (len - cur.len()) as u32;
        let mut x = lo;
        while x + need <= hi {
            cur.push(x);
            rec(x + 1, hi, len, cur, out);
            cur.pop();
            x += 1;
        }
    }
    rec(lo, hi, len, &mut cur, &mut out);
    out
}

fn compact_for_seed(
    cfg: &SearchConfig,
    seed: &[u32],
    lifting: usize,
    nodes: &AtomicU64,
    budget: &Budget,
) -> Option<Vec<u32>> {
    let (gamma, n) = (cfg.gamma, cfg.n);
    let mut st = SeState::new(gamma, n, lifting as u32, cfg.criterion);
    for (i, &s) in seed.iter().enumerate() {
        if !st.place(i, 0, 0) || !st.place(i, 1, s) {
            return None;
        }
    }
    let mut coefs = vec![0u32, 1];
    let mut visited = 0u64;
    let found = compact_dfs(cfg, seed, lifting, &mut st, &mut coefs, &mut visited, budget);
    nodes.fetch_add(visited, Ordering::Relaxed);
    found.then_some(coefs)
}

fn compact_dfs(
    cfg: &SearchConfig,
    seed: &[u32],
    lifting: usize,
    st: &mut SeState,
    coefs: &mut Vec<u32>,
    visited: &mut u64,
    budget: &Budget,
) -> bool {
    let j = coefs.len();
    if j == cfg.n {
        return true;
    }
    *visited += 1;
    if (*visited).is_multiple_of(4096) && budget.expired() {
        return false;
    }
    let lo = coefs[j - 1] + 1;
    let remaining = (cfg.n - j) as u32;
    let mut g = lo.max(2);
    while g + remaining <= lifting as u32 {
        if !cfg.require_corollary
            || corollary_unchecked(seed, &[coefs.as_slice(), &[g]].concat(), lifting).is_none()
        {
            let mut placed = 0;
            let mut ok = true;
            for (i, &s) in seed.iter().enumerate() {
                let v = (s as u64 * g as u64 % lifting as u64) as u32;
                if st.place(i, j, v) {
                    placed += 1;
                } else {
                    ok = false;
                    break;
                }
            }
            if ok {
                coefs.push(g);
                if compact_dfs(cfg, seed, lifting, st, coefs, visited, budget) {
                    return true;
                }
                coefs.pop();
            }
            for _ in 0..placed {
                st.unplace();
            }
        }
        g += 1;
    }
    false
}

/// Smallest lifting degree in range with any single-edge `gamma x n`
/// matrix, and the lexicographically smallest normalized matrix there.
///
/// Normal form: row 0 and column 0 are zero, row 1 increases along columns
/// 1.., column 1 increases down rows 1.., and entry `(1,1)` is the minimum
/// over rows and columns 1... Permuting rows 1.. and columns 1.. maps any
/// girth-6 matrix to this form without changing its cycle structure.
pub fn search_general(cfg: &SearchConfig) -> Result<SearchOutcome> {
    cfg.validate()?;
    if cfg.mode != SearchMode::General {
        return Err(Error::Params("search_general needs general mode".into()));
    }
    let budget = Budget::new(cfg.budget);
    let mut per_lifting = Vec::new();
    for lifting in cfg.lifting_min.max(2)..=cfg.lifting_max {
        let nodes = AtomicU64::new(0);
        let n = lifting as u32;
        // branch on (1,1) and (1,2)
        let mut tops: Vec<(u32, u32)> = Vec::new();
        for a in 1..n {
            for b in a + 1..n {
                tops.push((a, b));
            }
        }
        let result = with_pool(cfg.workers, || {
            tops.par_iter()
                .find_map_first(|&(a, b)| general_branch(cfg, lifting, a, b, &nodes, &budget))
        })?;
        if budget.expired() {
            per_lifting.push(LiftingStatus {
                lifting,
                exhausted: false,
                nodes: None,
            });
            return Ok(SearchOutcome {
                config: cfg.clone(),
                found: None,
                per_lifting,
                budget_exhausted: true,
            });
        }
        match result {
            Some(matrix) => {
                per_lifting.push(LiftingStatus {
                    lifting,
                    exhausted: false,
                    nodes: None,
                });
                let certificate = certify(&matrix, None, cfg.oracle)?;
                return Ok(SearchOutcome {
                    config: cfg.clone(),
                    found: Some(Found {
                        matrix,
                        spec: None,
                        certificate,
                    }),
                    per_lifting,
                    budget_exhausted: false,
                });
            }
            None => per_lifting.push(LiftingStatus {
                lifting,
                exhausted: true,
                nodes: Some(nodes.load(Ordering::Relaxed)),
            }),
        }
    }
    Ok(SearchOutcome {
        config: cfg.clone(),
        found: None,
        per_lifting,
        budget_exhausted: false,
    })
}

fn general_branch(
    cfg: &SearchConfig,
    lifting: usize,
    a: u32,
    b: u32,
    nodes: &AtomicU64,
    budget: &Budget,
) -> Option<ExponentMatrix> {
    let (c, d) = (cfg.gamma, cfg.n);
    if d < 3 && b != a + 1 {
        // without a column 2 the second branch value is unused
        return None;
    }
    let mut st = SeState::new(c, d, lifting as u32, cfg.criterion);
    for i in 0..c {
        st.place(i, 0, 0);
    }
    for j in 1..d {
        st.place(0, j, 0);
    }
    if c < 2 {
        return None;
    }
    let mut grid = vec![vec![0u32; d]; c];
    if !st.place(1, 1, a) {
        return None;
    }
    grid[1][1] = a;
    let mut pos = 2;
    if d >= 3 {
        if !st.place(1, 2, b) {
            return None;
        }
        grid[1][2] = b;
        pos = 3;
    }
    let cells: Vec<(usize, usize)> = (1..c).flat_map(|i| (1..d).map(move |j| (i, j))).collect();
    let mut visited = 0u64;
    let found = general_dfs(lifting as u32, &cells, pos - 1, &mut st, &mut grid, &mut visited, budget);
    nodes.fetch_add(visited, Ordering::Relaxed);
    found.then(|| {
        let rows: Vec<Vec<u32>> = grid;
        ExponentMatrix::from_shifts(lifting, &rows).expect("search values are reduced")
    })
}

fn general_dfs(
    n: u32,
    cells: &[(usize, usize)],
    k: usize,
    st: &mut SeState,
    grid: &mut [Vec<u32>],
    visited: &mut u64,
    budget: &Budget,
) -> bool {
    if k == cells.len() {
        return true;
    }
    *visited += 1;
    if (*visited).is_multiple_of(4096) && budget.expired() {
        return false;
    }
    let (i, j) = cells[k];
    let min = grid[1][1];
    let lo = if i == 1 {
        grid[1][j - 1] + 1
    } else if j == 1 {
        grid[i - 1][1] + 1
    } else {
        min
    };
    for v in lo..n {
        if st.place(i, j, v) {
            grid[i][j] = v;
            if general_dfs(n, cells, k + 1, st, grid, visited, budget) {
                return true;
            }
            st.unplace();
        }
    }
    false
}

/// Dispatches on the configured mode.
pub fn search(cfg: &SearchConfig) -> Result<SearchOutcome> {
    match cfg.mode {
        SearchMode::Compact => search_compact(cfg),
        SearchMode::General => search_general(cfg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chord::{first_submatrix_failure, is_chordfree};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn fill(b: &ExponentMatrix, criterion: Criterion) -> bool {
        let mut st = SeState::new(b.rows(), b.cols(), b.lifting() as u32, criterion);
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                if let [x] = b.cell(i, j) {
                    if !st.place(i, j, *x) {
                        return false;
                    }
                }
            }
        }
        true
    }

    #[test]
    fn incremental_state_matches_global_check() {
        let mut rng = StdRng::seed_from_u64(7);
        let mut seen = [0usize; 2];
        for _ in 0..3000 {
            let c = rng.gen_range(2..=4);
            let d = rng.gen_range(2..=6);
            let n = rng.gen_range(4..=14);
            let rows: Vec<Vec<Option<u32>>> = (0..c)
                .map(|_| {
                    (0..d)
                        .map(|_| (!rng.gen_bool(0.1)).then(|| rng.gen_range(0..n as u32)))
                        .collect()
                })
                .collect();
            let b = ExponentMatrix::from_single_edge(n, &rows).unwrap();
            let expected = is_four_cycle_free(&b) && is_chordfree(&b).unwrap();
            assert_eq!(fill(&b, Criterion::Global), expected, "{b}");
            seen[expected as usize] += 1;
            // the submatrix checks skip blocks with an empty cell
            if (0..c).all(|i| (0..d).all(|j| !b.is_empty_cell(i, j))) {
                let band = is_four_cycle_free(&b) && first_submatrix_failure(&b).unwrap().is_none();
                assert_eq!(fill(&b, Criterion::Band), band, "band {b}");
            }
        }
        assert!(seen[0] > 100 && seen[1] > 100, "{seen:?}");
    }

    #[test]
    fn unplace_restores_state() {
        let mut st = SeState::new(3, 3, 7, Criterion::Global);
        for (i, j, v) in [(0, 0, 0), (0, 1, 0), (0, 2, 0), (1, 0, 0), (1, 1, 1), (1, 2, 2), (2, 0, 0), (2, 1, 3)] {
            assert!(st.place(i, j, v));
        }
        let lens = |st: &SeState| st.readings.iter().map(Vec::len).sum::<usize>();
        // 1 - 2 + 4 - 3 closes a 4-cycle on rows 1, 2 and columns 1, 2
        assert!(!st.place(2, 2, 4));
        assert_eq!((lens(&st), st.log.len()), (0, 8));
        // b00 + b12 + b21 = b01 + b10 + b22 closes one 6-cycle, read at three terms
        assert!(st.place(2, 2, 5));
        assert_eq!(lens(&st), 3);
        st.unplace();
        assert_eq!((lens(&st), st.log.len()), (0, 8));
    }

    #[test]
    fn compact_search_three_by_five() {
        let mut cfg = SearchConfig::new(3, 5, 11, SearchMode::Compact);
        cfg.workers = 2;
        let out = search_compact(&cfg).unwrap();
        let f = out.found.unwrap();
        let spec = f.spec.unwrap();
        assert_eq!((spec.seed.clone(), spec.lifting), (vec![0, 1, 3], 11));
        assert_eq!(spec.coefficients, vec![0, 1, 2, 4, 7]);
        assert!(f.certificate.holds(), "{:?}", f.certificate);
        assert!(out.per_lifting[..out.per_lifting.len() - 1].iter().all(|s| s.exhausted));
    }

    #[test]
    fn two_rows_are_trivial() {
        let cfg = SearchConfig::new(2, 4, 10, SearchMode::General);
        let out = search_general(&cfg).unwrap();
        let f = out.found.unwrap();
        assert_eq!(f.matrix.lifting(), 4);
        assert!(f.certificate.holds());
    }

    #[test]
    fn tuples_are_lexicographic() {
        assert_eq!(
            increasing_tuples(2, 5, 2),
            vec![vec![2, 3], vec![2, 4], vec![3, 4]]
        );
        assert_eq!(increasing_tuples(2, 5, 0), vec![Vec::<u32>::new()]);
    }
}
