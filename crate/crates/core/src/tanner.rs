//! Lifted Tanner graph: the ground truth every algebraic condition is
//! checked against.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::ExponentMatrix;
use crate::parity::{BlockShape, ParityCheckMatrix};

/// Bipartite graph with `vars` v-nodes and `checks` c-nodes.
///
/// For lifted graphs, v-node `j*N + x` is copy `x` of column block `j` and
/// c-node `i*N + y` is copy `y` of row block `i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TannerGraph {
    var_adj: Vec<Vec<usize>>,
    chk_adj: Vec<Vec<usize>>,
    shape: Option<BlockShape>,
}

impl TannerGraph {
    pub fn from_adjacency(num_vars: usize, var_adj: Vec<Vec<usize>>, num_checks: usize) -> Self {
        assert_eq!(var_adj.len(), num_vars);
        let mut chk_adj = vec![Vec::new(); num_checks];
        let mut var_adj = var_adj;
        for (v, cs) in var_adj.iter_mut().enumerate() {
            cs.sort_unstable();
            cs.dedup();
            for &c in cs.iter() {
                chk_adj[c].push(v);
            }
        }
        Self {
            var_adj,
            chk_adj,
            shape: None,
        }
    }

    pub fn from_parity(h: &ParityCheckMatrix) -> Self {
        let mut g = Self::from_adjacency(h.cols(), h.variable_neighbours(), h.rows());
        g.shape = h.shape();
        g
    }

    /// Lifted graph of `b`: c-node `(i, y)` joins v-node `(j, y + s mod N)`
    /// for every shift `s` of cell `(i, j)`.
    pub fn from_exponent(b: &ExponentMatrix) -> Self {
        let n = b.lifting();
        let mut var_adj = vec![Vec::new(); b.cols() * n];
        for i in 0..b.rows() {
            for j in 0..b.cols() {
                for &s in b.cell(i, j) {
                    for y in 0..n {
                        var_adj[j * n + (y + s as usize) % n].push(i * n + y);
                    }
                }
            }
        }
        let mut g = Self::from_adjacency(b.cols() * n, var_adj, b.rows() * n);
        g.shape = Some(BlockShape {
            block_rows: b.rows(),
            block_cols: b.cols(),
            lifting: n,
        });
        g
    }

    pub fn num_vars(&self) -> usize {
        self.var_adj.len()
    }

    pub fn num_checks(&self) -> usize {
        self.chk_adj.len()
    }

    pub fn shape(&self) -> Option<BlockShape> {
        self.shape
    }

    pub fn var_neighbours(&self, v: usize) -> &[usize] {
        &self.var_adj[v]
    }

    pub fn check_neighbours(&self, c: usize) -> &[usize] {
        &self.chk_adj[c]
    }

    pub fn var_degree(&self, v: usize) -> usize {
        self.var_adj[v].len()
    }

    pub fn is_edge(&self, v: usize, c: usize) -> bool {
        self.var_adj[v].binary_search(&c).is_ok()
    }

    pub fn edge_count(&self) -> usize {
        self.var_adj.iter().map(Vec::len).sum()
    }

    /// `(block, copy)` of v-node `v`, when the graph is a lift.
    pub fn var_block(&self, v: usize) -> Option<(usize, usize)> {
        self.shape.map(|s| (v / s.lifting, v % s.lifting))
    }

    /// Image of v-node `v` under the cyclic automorphism shifted `t` times.
    pub fn rotate_var(&self, v: usize, t: usize) -> usize {
        match self.shape {
            Some(s) => {
                let n = s.lifting;
                v / n * n + (v % n + t) % n
            }
            None => v,
        }
    }

    /// V-nodes each of whose orbits under the cyclic automorphism meets this
    /// set. For a lift these are the copy-0 v-nodes; otherwise all v-nodes.
    pub fn orbit_representatives(&self) -> Vec<usize> {
        match self.shape {
            Some(s) => (0..s.block_cols).map(|j| j * s.lifting).collect(),
            None => (0..self.num_vars()).collect(),
        }
    }

    /// Orbit class of `v`: its column block for a lift, `v` itself
    /// otherwise. Each representative `r` of [`orbit_representatives`]
    /// has class at most that of any v-node in its orbit.
    ///
    /// [`orbit_representatives`]: Self::orbit_representatives
    pub(crate) fn orbit_class(&self, v: usize) -> usize {
        match self.shape {
            Some(s) => v / s.lifting,
            None => v,
        }
    }

    /// Lifting degree for a lift, 1 otherwise.
    pub(crate) fn period(&self) -> usize {
        self.shape.map_or(1, |s| s.lifting)
    }

    pub(crate) fn max_var_degree(&self) -> usize {
        self.var_adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// C-nodes adjacent to both `a` and `b`.
    pub fn common_checks(&self, a: usize, b: usize) -> Vec<usize> {
        let (x, y) = (&self.var_adj[a], &self.var_adj[b]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < x.len() && j < y.len() {
            match x[i].cmp(&y[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(x[i]);
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }

    /// Length of a shortest cycle through v-node `root`, searching no
    /// further than `bound` (exclusive).
    fn shortest_cycle_through(&self, root: usize, bound: usize) -> Option<usize> {
        // node ids: vars as-is, checks offset by num_vars
        let nv = self.num_vars();
        let total = nv + self.num_checks();
        let mut dist = vec![usize::MAX; total];
        let mut parent = vec![usize::MAX; total];
        let mut queue = VecDeque::new();
        dist[root] = 0;
        queue.push_back(root);
        let mut best = bound;
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 2 > best {
                break;
            }
            let neigh: &[usize] = if u < nv {
                &self.var_adj[u]
            } else {
                &self.chk_adj[u - nv]
            };
            for &w0 in neigh {
                let w = if u < nv { w0 + nv } else { w0 };
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
        (best < bound).then_some(best)
    }

    /// Girth by breadth-first search; `None` for a forest.
    pub fn bfs_girth(&self) -> Option<usize> {
        let mut best = usize::MAX;
        let roots: Vec<usize> = match self.shape {
            Some(_) => self.orbit_representatives(),
            None => (0..self.num_vars()).collect(),
        };
        for v in roots {
            if let Some(g) = self.shortest_cycle_through(v, best) {
                best = g;
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// True when no two v-nodes share more than one c-node.
    pub fn is_four_cycle_free(&self) -> bool {
        self.find_four_cycle().is_none()
    }

    fn find_four_cycle(&self) -> Option<(usize, usize)> {
        let mut seen = vec![usize::MAX; self.num_vars()];
        for v in 0..self.num_vars() {
            for &c in &self.var_adj[v] {
                for &u in &self.chk_adj[c] {
                    if u == v {
                        continue;
                    }
                    if seen[u] == v {
                        return Some((v, u));
                    }
                    seen[u] = v;
                }
            }
        }
        None
    }
}

/// A cycle `v0 c0 v1 c1 ... v(k-1) c(k-1) v0` of the Tanner graph, where
/// `checks[i]` joins `vars[i]` and `vars[i+1]`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CycleInstance {
    pub vars: Vec<usize>,
    pub checks: Vec<usize>,
}

impl CycleInstance {
    pub fn new(vars: Vec<usize>, checks: Vec<usize>) -> Self {
        Self { vars, checks }.canonical()
    }

    pub fn len(&self) -> usize {
        2 * self.vars.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vars.is_empty()
    }

    /// Validity: alternating adjacency and pairwise distinct nodes.
    pub fn is_valid_in(&self, g: &TannerGraph) -> bool {
        let k = self.vars.len();
        if k < 2 || self.checks.len() != k {
            return false;
        }
        let vs: BTreeSet<_> = self.vars.iter().collect();
        let cs: BTreeSet<_> = self.checks.iter().collect();
        if vs.len() != k || cs.len() != k {
            return false;
        }
        (0..k).all(|i| {
            g.is_edge(self.vars[i], self.checks[i]) && g.is_edge(self.vars[(i + 1) % k], self.checks[i])
        })
    }

    /// Smallest rotation/reflection, starting at the smallest v-node.
    pub fn canonical(&self) -> Self {
        let k = self.vars.len();
        let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
        for s in 0..k {
            let fwd_v: Vec<usize> = (0..k).map(|i| self.vars[(s + i) % k]).collect();
            let fwd_c: Vec<usize> = (0..k).map(|i| self.checks[(s + i) % k]).collect();
            // reversed: v_s, c_{s-1}, v_{s-1}, c_{s-2}, ...
            let rev_v: Vec<usize> = (0..k).map(|i| self.vars[(s + k - i) % k]).collect();
            let rev_c: Vec<usize> = (0..k).map(|i| self.checks[(s + 2 * k - i - 1) % k]).collect();
            for cand in [(fwd_v, fwd_c), (rev_v, rev_c)] {
                let key = interleave(&cand.0, &cand.1);
                if best
                    .as_ref()
                    .is_none_or(|b| key < interleave(&b.0, &b.1))
                {
                    best = Some(cand);
                }
            }
        }
        let (vars, checks) = best.unwrap();
        Self { vars, checks }
    }
}

fn interleave(v: &[usize], c: &[usize]) -> Vec<(usize, usize)> {
    v.iter().copied().zip(c.iter().copied()).collect()
}

/// An outside connection that makes a cycle non-chordless.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Chord {
    /// C-node outside the cycle adjacent to two or more of its v-nodes.
    ExternalCheck { check: usize, vars: Vec<usize> },
    /// Edge between a cycle v-node and a cycle c-node that the cycle does
    /// not use.
    Edge { var: usize, check: usize },
}

/// All chords of `cycle`.
pub fn chords(cycle: &CycleInstance, g: &TannerGraph) -> Vec<Chord> {
    let k = cycle.vars.len();
    let check_pos: std::collections::HashMap<usize, usize> =
        cycle.checks.iter().enumerate().map(|(i, &c)| (c, i)).collect();
    let var_set: BTreeSet<usize> = cycle.vars.iter().copied().collect();
    let mut out = Vec::new();
    let mut external: BTreeSet<usize> = BTreeSet::new();
    for (i, &v) in cycle.vars.iter().enumerate() {
        let own = [cycle.checks[i], cycle.checks[(i + k - 1) % k]];
        for &c in g.var_neighbours(v) {
            if check_pos.contains_key(&c) {
                if !own.contains(&c) {
                    out.push(Chord::Edge { var: v, check: c });
                }
            } else {
                external.insert(c);
            }
        }
    }
    for c in external {
        let vars: Vec<usize> = g
            .check_neighbours(c)
            .iter()
            .copied()
            .filter(|v| var_set.contains(v))
            .collect();
        if vars.len() >= 2 {
            out.push(Chord::ExternalCheck { check: c, vars });
        }
    }
    out.sort();
    out
}

pub fn is_chordless(cycle: &CycleInstance, g: &TannerGraph) -> bool {
    chords(cycle, g).is_empty()
}

/// All cycles of length `len`, canonical and sorted.
pub fn enumerate_cycles(g: &TannerGraph, len: usize) -> Vec<CycleInstance> {
    let mut out = Vec::new();
    if len < 4 || !len.is_multiple_of(2) {
        return out;
    }
    let k = len / 2;
    let nv = g.num_vars();
    for v0 in 0..nv {
        let dist = var_distances_from(g, v0, k);
        let mut vars = vec![v0];
        let mut checks = Vec::new();
        let mut used_chk = BTreeSet::new();
        cycle_dfs(g, k, &dist, &mut vars, &mut checks, &mut used_chk, &mut out);
    }
    out.sort();
    out
}

/// Half-distances (in v-node hops) from `root`, truncated at `limit`.
fn var_distances_from(g: &TannerGraph, root: usize, limit: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.num_vars()];
    dist[root] = 0;
    let mut queue = VecDeque::from([root]);
    while let Some(u) = queue.pop_front() {
        if dist[u] >= limit {
            continue;
        }
        for &c in g.var_neighbours(u) {
            for &w in g.check_neighbours(c) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    dist
}

fn cycle_dfs(
    g: &TannerGraph,
    k: usize,
    dist: &[usize],
    vars: &mut Vec<usize>,
    checks: &mut Vec<usize>,
    used_chk: &mut BTreeSet<usize>,
    out: &mut Vec<CycleInstance>,
) {
    let v0 = vars[0];
    let cur = *vars.last().unwrap();
    let depth = vars.len();
    for &c in g.var_neighbours(cur) {
        if used_chk.contains(&c) {
            continue;
        }
        if depth == k {
            // closing step back to v0
            if g.is_edge(v0, c) {
                let mut cs = checks.clone();
                cs.push(c);
                // keep one of the two traversal directions
                if k == 2 && cs[0] > cs[1] {
                    continue;
                }
                if k > 2 && vars[1] > vars[k - 1] {
                    continue;
                }
                out.push(CycleInstance {
                    vars: vars.clone(),
                    checks: cs,
                });
            }
            continue;
        }
        for &w in g.check_neighbours(c) {
            if w <= v0 || vars.contains(&w) {
                continue;
            }
            // remaining hops back to v0 must fit
            if dist[w] > k - depth {
                continue;
            }
            vars.push(w);
            checks.push(c);
            used_chk.insert(c);
            cycle_dfs(g, k, dist, vars, checks, used_chk, out);
            used_chk.remove(&c);
            checks.pop();
            vars.pop();
        }
    }
}

/// Two 6-cycles sharing the path `vars.0 - check - vars.1`; their union is an
/// 8-cycle with that path's c-node as a chord.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct EightCycleWitness {
    pub shared_vars: (usize, usize),
    pub shared_check: usize,
    pub first: CycleInstance,
    pub second: CycleInstance,
    pub eight_cycle: CycleInstance,
    /// Every c-node outside the 8-cycle adjacent to two of its v-nodes.
    pub external_common_checks: Vec<usize>,
}

struct VnLabels {
    /// per v-node: sorted `(neighbour v-node, shared c-node)`
    adj: Vec<Vec<(usize, usize)>>,
}

impl VnLabels {
    fn new(g: &TannerGraph) -> Result<Self> {
        if let Some((a, b)) = g.find_four_cycle() {
            return Err(Error::Precondition(format!(
                "graph has a 4-cycle through v-nodes {a} and {b}"
            )));
        }
        let adj = (0..g.num_vars())
            .map(|v| {
                let mut l: Vec<(usize, usize)> = g
                    .var_neighbours(v)
                    .iter()
                    .flat_map(|&c| {
                        g.check_neighbours(c)
                            .iter()
                            .filter(move |&&u| u != v)
                            .map(move |&u| (u, c))
                    })
                    .collect();
                l.sort_unstable();
                l
            })
            .collect();
        Ok(Self { adj })
    }

    /// Third v-nodes closing a 6-cycle through `a - c - b`, with the two
    /// closing c-nodes `(label(b, x), label(x, a))`.
    fn six_cycle_apexes(&self, a: usize, b: usize, c: usize) -> Vec<(usize, usize, usize)> {
        let (la, lb) = (&self.adj[a], &self.adj[b]);
        let (mut i, mut j) = (0, 0);
        let mut out = Vec::new();
        while i < la.len() && j < lb.len() {
            match la[i].0.cmp(&lb[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    let x = la[i].0;
                    let (cax, cbx) = (la[i].1, lb[j].1);
                    if cax != c && cbx != c && cax != cbx {
                        out.push((x, cbx, cax));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out
    }
}

/// All 6-cycles of a 4-cycle-free graph, canonical and sorted.
pub fn six_cycles(g: &TannerGraph) -> Result<Vec<CycleInstance>> {
    let labels = VnLabels::new(g)?;
    let mut seen = BTreeSet::new();
    for c in 0..g.num_checks() {
        let nb = g.check_neighbours(c);
        for (p, &a) in nb.iter().enumerate() {
            for &b in &nb[p + 1..] {
                for (x, cbx, cxa) in labels.six_cycle_apexes(a, b, c) {
                    seen.insert(CycleInstance::new(vec![a, b, x], vec![c, cbx, cxa]));
                }
            }
        }
    }
    Ok(seen.into_iter().collect())
}

/// Every pair of 6-cycles meeting in exactly one v-c-v path. Empty exactly
/// when the graph has no 8-cycle with a chord.
///
/// Needs a 4-cycle-free graph: each v-node pair then shares at most one
/// c-node, and 6-cycles are triangles of the v-node adjacency.
pub fn find_8wc(g: &TannerGraph) -> Result<Vec<EightCycleWitness>> {
    let labels = VnLabels::new(g)?;
    let mut out = Vec::new();
    for c in 0..g.num_checks() {
        let nb = g.check_neighbours(c);
        for (p, &a) in nb.iter().enumerate() {
            for &b in &nb[p + 1..] {
                let apexes = labels.six_cycle_apexes(a, b, c);
                for (s, &(x, cbx, cxa)) in apexes.iter().enumerate() {
                    for &(y, cby, cya) in &apexes[s + 1..] {
                        // a shared closing c-node makes the union a theta graph rather than an 8-cycle
                        if cbx == cby || cxa == cya {
                            continue;
                        }
                        let eight = CycleInstance::new(vec![a, x, b, y], vec![cxa, cbx, cby, cya]);
                        let external_common_checks = chords(&eight, g)
                            .into_iter()
                            .filter_map(|ch| match ch {
                                Chord::ExternalCheck { check, .. } => Some(check),
                                Chord::Edge { .. } => None,
                            })
                            .collect();
                        out.push(EightCycleWitness {
                            shared_vars: (a, b),
                            shared_check: c,
                            first: CycleInstance::new(vec![a, b, x], vec![c, cbx, cxa]),
                            second: CycleInstance::new(vec![a, b, y], vec![c, cby, cya]),
                            eight_cycle: eight,
                            external_common_checks,
                        });
                    }
                }
            }
        }
    }
    out.sort();
    Ok(out)
}

/// Count of 8-cycle-with-chord witness pairs without materialising them.
pub fn count_8wc(g: &TannerGraph) -> Result<usize> {
    let labels = VnLabels::new(g)?;
    let mut total = 0;
    for c in 0..g.num_checks() {
        let nb = g.check_neighbours(c);
        for (p, &a) in nb.iter().enumerate() {
            for &b in &nb[p + 1..] {
                let apexes = labels.six_cycle_apexes(a, b, c);
                for (s, x) in apexes.iter().enumerate() {
                    total += apexes[s + 1..]
                        .iter()
                        .filter(|y| x.1 != y.1 && x.2 != y.2)
                        .count();
                }
            }
        }
    }
    Ok(total)
}

/// A cycle of the requested length together with its chords.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChordedCycle {
    pub cycle: CycleInstance,
    pub chords: Vec<Chord>,
    /// True when every chord is an outside c-node joining two cycle v-nodes.
    pub external_check_only: bool,
}

/// All cycles of length 8, 10 or 12 that have a chord.
pub fn find_cycles_wc(g: &TannerGraph, len: usize) -> Result<Vec<ChordedCycle>> {
    if ![8, 10, 12].contains(&len) {
        return Err(Error::Params(format!(
            "cycle length must be 8, 10 or 12, got {len}"
        )));
    }
    if let Some((a, b)) = g.find_four_cycle() {
        return Err(Error::Precondition(format!(
            "graph has a 4-cycle through v-nodes {a} and {b}"
        )));
    }
    Ok(enumerate_cycles(g, len)
        .into_iter()
        .filter_map(|cycle| {
            let ch = chords(&cycle, g);
            if ch.is_empty() {
                return None;
            }
            let external_check_only = ch.iter().all(|c| matches!(c, Chord::ExternalCheck { .. }));
            Some(ChordedCycle {
                cycle,
                chords: ch,
                external_check_only,
            })
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lifted(n: usize, rows: &[Vec<u32>]) -> TannerGraph {
        TannerGraph::from_exponent(&ExponentMatrix::from_shifts(n, rows).unwrap())
    }

    #[test]
    fn girth_of_small_lifts() {
        assert_eq!(lifted(2, &[vec![0, 0], vec![0, 0]]).bfs_girth(), Some(4));
        assert_eq!(lifted(2, &[vec![0, 0], vec![0, 1]]).bfs_girth(), Some(8));
        assert_eq!(lifted(5, &[vec![0, 1, 2]]).bfs_girth(), None);
    }

    #[test]
    fn generic_graph_girth_matches_lift() {
        let b = ExponentMatrix::from_shifts(7, &[vec![0, 0, 0], vec![0, 1, 3], vec![0, 2, 6]]).unwrap();
        let lifted = TannerGraph::from_exponent(&b);
        let mut plain = TannerGraph::from_parity(&crate::parity::lift(&b));
        plain.shape = None;
        assert_eq!(lifted.bfs_girth(), plain.bfs_girth());
    }

    #[test]
    fn cycle_enumeration_counts() {
        // lift of the all-zero 2x2 at N=2 is two disjoint copies of K_{2,2}
        let g = lifted(2, &[vec![0, 0], vec![0, 0]]);
        assert_eq!(enumerate_cycles(&g, 4).len(), 2);
        // the N=2 matrix above lifts to one 8-cycle
        let g = lifted(2, &[vec![0, 0], vec![0, 1]]);
        assert_eq!(enumerate_cycles(&g, 4).len(), 0);
        let eights = enumerate_cycles(&g, 8);
        assert_eq!(eights.len(), 1);
        assert!(eights[0].is_valid_in(&g));
        assert!(is_chordless(&eights[0], &g));
    }

    #[test]
    fn four_cycle_is_vacuously_chordless() {
        let g = lifted(2, &[vec![0, 0], vec![0, 0]]);
        for c in enumerate_cycles(&g, 4) {
            assert!(is_chordless(&c, &g));
        }
    }

    #[test]
    fn canonical_cycle_is_rotation_invariant() {
        let a = CycleInstance::new(vec![3, 1, 2], vec![10, 11, 12]);
        let b = CycleInstance::new(vec![1, 2, 3], vec![11, 12, 10]);
        let c = CycleInstance::new(vec![2, 1, 3], vec![11, 10, 12]);
        assert_eq!(a, b);
        assert_eq!(a, c);
        assert_eq!(a.vars[0], 1);
    }

    #[test]
    fn single_six_cycle_has_no_witness() {
        // 3x3 protograph, N=1 style lift via a hexagon: use a plain graph
        let g = TannerGraph::from_adjacency(3, vec![vec![0, 2], vec![0, 1], vec![1, 2]], 3);
        assert_eq!(six_cycles(&g).unwrap().len(), 1);
        assert!(find_8wc(&g).unwrap().is_empty());
    }

    #[test]
    fn diamond_is_eight_cycle_with_chord() {
        // v0..v3; c0=(v0,v1) is the chord, triangles v0 v1 v2 and v0 v1 v3
        let var_adj = vec![vec![0, 1, 3], vec![0, 2, 4], vec![1, 2], vec![3, 4]];
        let g = TannerGraph::from_adjacency(4, var_adj, 5);
        let w = find_8wc(&g).unwrap();
        assert_eq!(w.len(), 1);
        assert_eq!(w[0].shared_check, 0);
        assert_eq!(w[0].external_common_checks, vec![0]);
        let wc = find_cycles_wc(&g, 8).unwrap();
        assert_eq!(wc.len(), 1);
        assert_eq!(wc[0].cycle, w[0].eight_cycle);
        assert!(wc[0].external_check_only);
        assert_eq!(count_8wc(&g).unwrap(), 1);
    }

    #[test]
    fn theta_is_not_an_eight_cycle() {
        // three paths of length 3 between v-node 0 and c-node 1
        let var_adj = vec![vec![0, 2, 3], vec![0, 1], vec![1, 2], vec![1, 3]];
        let g = TannerGraph::from_adjacency(4, var_adj, 4);
        assert_eq!(g.bfs_girth(), Some(6));
        assert_eq!(six_cycles(&g).unwrap().len(), 3);
        assert!(find_8wc(&g).unwrap().is_empty());
        assert_eq!(count_8wc(&g).unwrap(), 0);
        assert!(find_cycles_wc(&g, 8).unwrap().is_empty());
    }

    #[test]
    fn chord_edge_detected() {
        // 6-cycle v0 c0 v1 c1 v2 c2 with an extra edge v0-c1
        let var_adj = vec![vec![0, 1, 2], vec![0, 1], vec![1, 2]];
        let g = TannerGraph::from_adjacency(3, var_adj, 3);
        let cyc = CycleInstance::new(vec![0, 1, 2], vec![0, 1, 2]);
        assert!(cyc.is_valid_in(&g));
        assert_eq!(chords(&cyc, &g), vec![Chord::Edge { var: 0, check: 1 }]);
    }

    #[test]
    fn four_cycles_are_a_precondition_error() {
        let g = lifted(3, &[vec![0, 0], vec![0, 0]]);
        assert!(matches!(find_8wc(&g), Err(Error::Precondition(_))));
        assert!(matches!(find_cycles_wc(&g, 8), Err(Error::Precondition(_))));
        assert!(matches!(find_cycles_wc(&g, 6), Err(Error::Params(_))));
    }

    #[test]
    fn orbit_rotation() {
        let g = lifted(5, &[vec![0, 1]]);
        assert_eq!(g.rotate_var(4, 2), 1);
        assert_eq!(g.rotate_var(7, 3), 5);
        assert_eq!(g.orbit_representatives(), vec![0, 5]);
    }
}
