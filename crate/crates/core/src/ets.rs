//! Elementary trapping sets: v-node sets whose induced c-nodes all have
//! degree 1 or 2.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use serde::Serialize;

use crate::tanner::TannerGraph;

/// Multigraph on a v-node set whose edges are the induced degree-2 c-nodes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VnGraph {
    pub vars: Vec<usize>,
    /// `(u, v, check)` with `u < v` indexing into `vars`.
    pub edges: Vec<(usize, usize, usize)>,
}

impl VnGraph {
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn degree(&self, u: usize) -> usize {
        self.edges.iter().filter(|e| e.0 == u || e.1 == u).count()
    }

    fn adjacency(&self) -> Vec<BTreeSet<usize>> {
        let mut adj = vec![BTreeSet::new(); self.vars.len()];
        for &(u, v, _) in &self.edges {
            adj[u].insert(v);
            adj[v].insert(u);
        }
        adj
    }

    /// Number of triangles (on distinct vertices).
    pub fn triangle_count(&self) -> usize {
        let adj = self.adjacency();
        let mut t = 0;
        for u in 0..adj.len() {
            for &v in adj[u].range(u + 1..) {
                t += adj[v].range(v + 1..).filter(|w| adj[u].contains(w)).count();
            }
        }
        t
    }

    /// Two triangles with an edge in common: four v-nodes on an 8-cycle
    /// whose fifth c-node joins two of them.
    pub fn has_shared_triangle_edge(&self) -> bool {
        let adj = self.adjacency();
        (0..adj.len()).any(|u| {
            adj[u]
                .range(u + 1..)
                .any(|&v| adj[u].intersection(&adj[v]).nth(1).is_some())
        })
    }

    pub fn is_connected(&self) -> bool {
        let adj = self.adjacency();
        if adj.is_empty() {
            return true;
        }
        let mut seen = vec![false; adj.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &w in &adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

fn induced_degrees(vars: &[usize], g: &TannerGraph) -> BTreeMap<usize, Vec<usize>> {
    let mut by_check: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (k, &v) in vars.iter().enumerate() {
        for &c in g.var_neighbours(v) {
            by_check.entry(c).or_default().push(k);
        }
    }
    by_check
}

/// VN graph of `vars`; its edges are sorted by check.
pub fn vn_graph(vars: &[usize], g: &TannerGraph) -> VnGraph {
    let edges = induced_degrees(vars, g)
        .into_iter()
        .filter(|(_, ks)| ks.len() == 2)
        .map(|(c, ks)| (ks[0], ks[1], c))
        .collect();
    VnGraph {
        vars: vars.to_vec(),
        edges,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TrappingSetRecord {
    pub vars: Vec<usize>,
    pub a: usize,
    pub b: usize,
    /// `histogram[k]` is the number of c-nodes with `k` neighbours in the set.
    pub histogram: Vec<usize>,
    pub elementary: bool,
    pub edges: usize,
    /// No 8-cycle with a chord lies inside the set.
    pub chordfree: bool,
    /// Number of distinct sets in the orbit under the cyclic automorphism.
    pub orbit_size: usize,
}

/// Classifies an arbitrary v-node set.
pub fn record(vars: &[usize], g: &TannerGraph) -> TrappingSetRecord {
    let mut vars = vars.to_vec();
    vars.sort_unstable();
    vars.dedup();
    let by_check = induced_degrees(&vars, g);
    let mut histogram = vec![0; 1];
    for ks in by_check.values() {
        if histogram.len() <= ks.len() {
            histogram.resize(ks.len() + 1, 0);
        }
        histogram[ks.len()] += 1;
    }
    let b = by_check.values().filter(|ks| ks.len() % 2 == 1).count();
    let vg = vn_graph(&vars, g);
    TrappingSetRecord {
        a: vars.len(),
        b,
        elementary: histogram.len() <= 3,
        edges: vg.edge_count(),
        chordfree: !vg.has_shared_triangle_edge(),
        orbit_size: orbit(&vars, g).len(),
        histogram,
        vars,
    }
}

fn rotated(vars: &[usize], t: usize, g: &TannerGraph) -> Vec<usize> {
    let mut r: Vec<usize> = vars.iter().map(|&v| g.rotate_var(v, t)).collect();
    r.sort_unstable();
    r
}

fn orbit(vars: &[usize], g: &TannerGraph) -> BTreeSet<Vec<usize>> {
    (0..g.period()).map(|t| rotated(vars, t, g)).collect()
}

/// Smallest rotation of a sorted set.
fn canonical(vars: &[usize], g: &TannerGraph) -> Vec<usize> {
    (0..g.period())
        .map(|t| rotated(vars, t, g))
        .min()
        .unwrap_or_default()
}

struct Grower<'a> {
    g: &'a TannerGraph,
    a_max: usize,
    b_max: usize,
    max_deg: usize,
    min_class: usize,
    members: Vec<usize>,
    in_set: Vec<bool>,
    degree: Vec<u8>,
    closed: Vec<bool>,
    open: usize,
    settled: usize,
    found: BTreeSet<Vec<usize>>,
}

impl<'a> Grower<'a> {
    fn new(g: &'a TannerGraph, a_max: usize, b_max: usize) -> Self {
        Self {
            g,
            a_max,
            b_max,
            max_deg: g.max_var_degree(),
            min_class: 0,
            members: Vec::new(),
            in_set: vec![false; g.num_vars()],
            degree: vec![0; g.num_checks()],
            closed: vec![false; g.num_checks()],
            open: 0,
            settled: 0,
            found: BTreeSet::new(),
        }
    }

    /// Adding `v` keeps the set elementary and leaves settled checks alone.
    fn can_add(&self, v: usize) -> bool {
        !self.in_set[v]
            && self.g.orbit_class(v) >= self.min_class
            && self
                .g
                .var_neighbours(v)
                .iter()
                .all(|&c| self.degree[c] == 0 || (self.degree[c] == 1 && !self.closed[c]))
    }

    fn add(&mut self, v: usize) {
        self.in_set[v] = true;
        self.members.push(v);
        for &c in self.g.var_neighbours(v) {
            self.degree[c] += 1;
            if self.degree[c] == 1 {
                self.open += 1;
            } else {
                self.open -= 1;
            }
        }
    }

    fn remove(&mut self, v: usize) {
        self.in_set[v] = false;
        self.members.pop();
        for &c in self.g.var_neighbours(v) {
            self.degree[c] -= 1;
            if self.degree[c] == 1 {
                self.open += 1;
            } else {
                self.open -= 1;
            }
        }
    }

    /// Each further v-node turns at most `max_deg` open checks into
    /// degree-2 checks.
    fn hopeless(&self) -> bool {
        let room = self.max_deg * (self.a_max - self.members.len());
        self.settled + self.open.saturating_sub(room) > self.b_max
    }

    fn first_open(&self) -> Option<usize> {
        self.members
            .iter()
            .flat_map(|&v| self.g.var_neighbours(v))
            .copied()
            .filter(|&c| self.degree[c] == 1 && !self.closed[c])
            .min()
    }

    /// Every set containing the current one in which each settled check
    /// keeps degree 1 is reached exactly once: the smallest open check
    /// either stays degree 1 or gains exactly one of its other neighbours.
    fn grow(&mut self) {
        if self.hopeless() {
            return;
        }
        let Some(c) = self.first_open() else {
            let mut set = self.members.clone();
            set.sort_unstable();
            self.found.insert(canonical(&set, self.g));
            return;
        };
        if self.settled < self.b_max {
            self.closed[c] = true;
            self.settled += 1;
            self.open -= 1;
            self.grow();
            self.open += 1;
            self.settled -= 1;
            self.closed[c] = false;
        }
        if self.members.len() < self.a_max {
            for &v in self.g.check_neighbours(c) {
                if self.can_add(v) {
                    self.add(v);
                    self.grow();
                    self.remove(v);
                }
            }
        }
    }
}

/// All connected elementary trapping sets with `a <= a_max` and
/// `b <= b_max`, one record per orbit, sorted by `(a, b, vars)`.
///
/// Connectivity is through degree-2 c-nodes; a disconnected ETS is a union
/// of smaller connected ones. Each record's `vars` is the smallest rotation.
pub fn enumerate_ets(g: &TannerGraph, a_max: usize, b_max: usize) -> Vec<TrappingSetRecord> {
    let seeds = g.orbit_representatives();
    let parts: Vec<BTreeSet<Vec<usize>>> = seeds
        .par_iter()
        .map(|&r| {
            let mut gr = Grower::new(g, a_max, b_max);
            gr.min_class = g.orbit_class(r);
            if a_max > 0 && gr.can_add(r) {
                gr.add(r);
                gr.grow();
            }
            gr.found
        })
        .collect();
    let all: BTreeSet<Vec<usize>> = parts.into_iter().flatten().collect();
    let mut out: Vec<TrappingSetRecord> = all.iter().map(|s| record(s, g)).collect();
    out.sort_by(|x, y| (x.a, x.b, &x.vars).cmp(&(y.a, y.b, &y.vars)));
    out
}

/// One census line: all sets of one `(a, b)` class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub a: usize,
    pub b: usize,
    /// Distinct sets, counting every rotation.
    pub count: usize,
    pub orbits: usize,
    pub elementary: bool,
    pub min_edges: usize,
    pub with_8wc: usize,
}

pub fn census(records: &[TrappingSetRecord]) -> Vec<CensusRow> {
    let mut rows: BTreeMap<(usize, usize, bool), CensusRow> = BTreeMap::new();
    for r in records {
        let row = rows.entry((r.a, r.b, r.elementary)).or_insert(CensusRow {
            a: r.a,
            b: r.b,
            count: 0,
            orbits: 0,
            elementary: r.elementary,
            min_edges: usize::MAX,
            with_8wc: 0,
        });
        row.count += r.orbit_size;
        row.orbits += 1;
        row.min_edges = row.min_edges.min(r.edges);
        row.with_8wc += !r.chordfree as usize;
    }
    rows.into_values().collect()
}

pub fn census_csv(rows: &[CensusRow]) -> String {
    let mut out = String::from("a,b,count,elementary,min_edges\n");
    for r in rows {
        out += &format!("{},{},{},{},{}\n", r.a, r.b, r.count, r.elementary, r.min_edges);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::ExponentMatrix;

    fn graph(rows: &[Vec<u32>], n: usize) -> TannerGraph {
        TannerGraph::from_exponent(&ExponentMatrix::from_shifts(n, rows).unwrap())
    }

    #[test]
    fn six_cycle_is_a_triangle() {
        let g = graph(&[vec![0, 0, 0, 0, 0], vec![0, 1, 2, 4, 7], vec![0, 3, 6, 1, 10]], 11);
        let cycles = crate::tanner::six_cycles(&g).unwrap();
        assert!(!cycles.is_empty());
        for cyc in cycles.iter().take(20) {
            let vg = vn_graph(&cyc.vars, &g);
            assert_eq!((vg.edge_count(), vg.triangle_count()), (3, 1));
            let r = record(&cyc.vars, &g);
            assert_eq!((r.a, r.b, r.orbit_size), (3, 3, 11));
        }
    }

    #[test]
    fn theta_and_diamond() {
        // plain triangle: v0, v1, v2 pairwise joined by c0, c1, c2
        let tri = TannerGraph::from_adjacency(3, vec![vec![0, 2], vec![0, 1], vec![1, 2]], 3);
        let vg = vn_graph(&[0, 1, 2], &tri);
        assert_eq!((vg.edge_count(), vg.triangle_count()), (3, 1));
        assert!(!vg.has_shared_triangle_edge());
        // two triangles on edge {0,1}: four v-nodes, five c-nodes
        let diamond = TannerGraph::from_adjacency(
            4,
            vec![vec![0, 1, 2], vec![0, 3, 4], vec![1, 3], vec![2, 4]],
            5,
        );
        let vg = vn_graph(&[0, 1, 2, 3], &diamond);
        assert_eq!((vg.edge_count(), vg.triangle_count()), (5, 2));
        assert!(vg.has_shared_triangle_edge());
        let r = record(&[0, 1, 2, 3], &diamond);
        assert!(!r.chordfree);
        assert_eq!((r.a, r.b), (4, 0));
    }

    #[test]
    fn singleton() {
        let g = graph(&[vec![0, 0], vec![0, 1]], 3);
        let vg = vn_graph(&[4], &g);
        assert_eq!(vg.edge_count(), 0);
        let r = record(&[4], &g);
        assert_eq!((r.a, r.b, r.orbit_size), (1, 2, 3));
        assert_eq!(r.histogram, vec![0, 2]);
    }

    /// Every connected elementary set by brute force over all subsets.
    fn brute(g: &TannerGraph, a_max: usize, b_max: usize) -> BTreeSet<Vec<usize>> {
        let n = g.num_vars();
        let mut out = BTreeSet::new();
        for mask in 1u32..(1 << n) {
            let vars: Vec<usize> = (0..n).filter(|v| mask >> v & 1 == 1).collect();
            if vars.len() > a_max {
                continue;
            }
            let r = record(&vars, g);
            if r.elementary && r.b <= b_max && vn_graph(&vars, g).is_connected() {
                out.insert(canonical(&vars, g));
            }
        }
        out
    }

    #[test]
    fn matches_brute_force() {
        let cases = [
            (vec![vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 4]], 5usize),
            (vec![vec![0, 0, 0, 0], vec![0, 1, 3, 0]], 4),
            (vec![vec![0, 1], vec![2, 0], vec![1, 1]], 6),
        ];
        for (rows, n) in cases {
            let g = graph(&rows, n);
            for (a_max, b_max) in [(4, 2), (6, 3), (12, 12)] {
                let got: BTreeSet<Vec<usize>> = enumerate_ets(&g, a_max, b_max)
                    .into_iter()
                    .map(|r| r.vars)
                    .collect();
                assert_eq!(got, brute(&g, a_max, b_max), "{rows:?} N={n} {a_max} {b_max}");
            }
        }
        let plain = TannerGraph::from_adjacency(
            5,
            vec![vec![0, 1, 2], vec![0, 3, 4], vec![1, 3], vec![2, 4], vec![0, 5]],
            6,
        );
        let got: BTreeSet<Vec<usize>> = enumerate_ets(&plain, 5, 5).into_iter().map(|r| r.vars).collect();
        assert_eq!(got, brute(&plain, 5, 5));
    }

    #[test]
    fn census_groups_classes() {
        let g = graph(&[vec![0, 0, 0], vec![0, 1, 2], vec![0, 2, 4]], 5);
        let recs = enumerate_ets(&g, 4, 4);
        let rows = census(&recs);
        let total: usize = rows.iter().map(|r| r.orbits).sum();
        assert_eq!(total, recs.len());
        let csv = census_csv(&rows);
        assert!(csv.starts_with("a,b,count,elementary,min_edges\n"));
        assert_eq!(csv.lines().count(), rows.len() + 1);
        assert!(rows.iter().any(|r| (r.a, r.b, r.count) == (1, 3, 15)));
    }
}
