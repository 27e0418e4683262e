use std::collections::BTreeMap;
use std::time::Instant;

use qclc::bounds::{dmin_bound, min_a, MinA};
use qclc::chord::{check_chordfree, ChordWitness};
use qclc::cycles::{find_zero_walk, DEFAULT_GIRTH_CAP};
use qclc::ets::{census, enumerate_ets, CensusRow};
use qclc::mindist::{min_distance, MinDistance, Strategy};
use qclc::tanner::{count_8wc, find_cycles_wc, TannerGraph};
use qclc::{
    algebraic_girth, serialize_text, validate, BaseMatrix, CycleWalk, ExponentMatrix, GirthBound,
    ValidationReport,
};
use serde::Serialize;
use sha2::{Digest, Sha256};

pub const SCHEMA: &str = "qclc.report.v1";

/// Oracle runs by default up to this many v-nodes.
pub const ORACLE_DEFAULT_MAX_VARS: usize = 10_000;

#[derive(Debug, Clone, Serialize)]
pub struct InputInfo {
    pub path: String,
    /// SHA-256 of the canonical text form.
    pub digest: String,
    pub rows: usize,
    pub cols: usize,
    pub lifting: usize,
    pub single_edge: bool,
    pub min_column_weight: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct GirthInfo {
    pub algebraic: GirthBound,
    pub oracle_run: bool,
    pub oracle: Option<usize>,
    pub four_cycle_witness: Option<CycleWalk>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChordInfo {
    pub free: bool,
    pub violations: usize,
    pub degenerate: usize,
    /// The first few non-degenerate witnesses.
    pub witnesses: Vec<ChordWitness>,
    pub oracle_8wc_pairs: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct EtsInfo {
    pub a_max: usize,
    pub b_max: usize,
    /// Only sets connected through degree-2 c-nodes are grown; a
    /// disconnected ETS is a union of smaller connected ones.
    pub connected_only: bool,
    pub census: Vec<CensusRow>,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundsInfo {
    pub gamma: usize,
    /// Lengths up to which every cycle is known to be chordless.
    pub chordless_up_to: usize,
    pub dmin_bound: usize,
    pub min_a: Vec<MinA>,
}

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub schema: &'static str,
    pub input: InputInfo,
    pub validation: ValidationReport,
    pub girth: GirthInfo,
    /// Absent when the matrix has 4-cycles.
    pub chordfree: Option<ChordInfo>,
    pub ets: Option<EtsInfo>,
    pub mindist: Option<MinDistance>,
    pub bounds: BoundsInfo,
    pub status: &'static str,
    pub inconsistencies: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<BTreeMap<&'static str, u128>>,
}

#[derive(Debug, Clone)]
pub struct Options {
    pub oracle: Option<bool>,
    pub max_witnesses: usize,
    pub ets: Option<(usize, usize)>,
    pub mindist: Option<(Strategy, Option<usize>)>,
    pub timing: bool,
}

impl Default for Options {
    fn default() -> Self {
        Self {
            oracle: None,
            max_witnesses: 5,
            ets: None,
            mindist: None,
            timing: false,
        }
    }
}

pub fn digest(b: &ExponentMatrix) -> String {
    let hash = Sha256::digest(serialize_text(b).as_bytes());
    hash.iter().map(|x| format!("{x:02x}")).collect()
}

fn girth_consistent(alg: GirthBound, oracle: Option<usize>) -> bool {
    match alg {
        GirthBound::Exact(g) => oracle == Some(g),
        GirthBound::AtLeast(g) => oracle.is_none_or(|o| o >= g),
    }
}

impl Report {
    pub fn build(path: &str, base: &BaseMatrix, b: &ExponentMatrix, opts: &Options) -> qclc::Result<Self> {
        let mut timing = BTreeMap::new();
        let mut clock = Instant::now();
        let mut lap = |name: &'static str, clock: &mut Instant| {
            timing.insert(name, clock.elapsed().as_millis());
            *clock = Instant::now();
        };
        let validation = validate(b, base)?;
        let run_oracle = opts
            .oracle
            .unwrap_or(b.cols() * b.lifting() <= ORACLE_DEFAULT_MAX_VARS);
        let graph = run_oracle.then(|| TannerGraph::from_exponent(b));
        let algebraic = algebraic_girth(b, DEFAULT_GIRTH_CAP);
        let four_cycle_witness = find_zero_walk(b, 2);
        let girth = GirthInfo {
            algebraic,
            oracle_run: run_oracle,
            oracle: graph.as_ref().and_then(TannerGraph::bfs_girth),
            four_cycle_witness: four_cycle_witness.clone(),
        };
        lap("girth", &mut clock);

        let mut inconsistencies = Vec::new();
        if run_oracle && !girth_consistent(algebraic, girth.oracle) {
            inconsistencies.push(format!(
                "algebraic girth {algebraic:?} but oracle girth {:?}",
                girth.oracle
            ));
        }

        let chordfree = if four_cycle_witness.is_none() {
            let rep = check_chordfree(b)?;
            let pairs = graph.as_ref().map(count_8wc).transpose()?;
            let free = rep.is_free();
            if let Some(p) = pairs {
                if free != (p == 0) {
                    inconsistencies.push(format!(
                        "algebraic chord-free verdict {free} but oracle finds {p} pairs"
                    ));
                }
            }
            let violations: Vec<ChordWitness> = rep.violations().cloned().collect();
            Some(ChordInfo {
                free,
                violations: violations.len(),
                degenerate: rep.witnesses.len() - violations.len(),
                witnesses: violations.into_iter().take(opts.max_witnesses).collect(),
                oracle_8wc_pairs: pairs,
            })
        } else {
            None
        };
        lap("chordfree", &mut clock);

        let ets = match opts.ets {
            Some((a_max, b_max)) => {
                let g = graph.clone().unwrap_or_else(|| TannerGraph::from_exponent(b));
                Some(EtsInfo {
                    a_max,
                    b_max,
                    connected_only: true,
                    census: census(&enumerate_ets(&g, a_max, b_max)),
                })
            }
            None => None,
        };
        lap("ets", &mut clock);

        let mindist = match opts.mindist {
            Some((strategy, limit)) => {
                let g = graph.clone().unwrap_or_else(|| TannerGraph::from_exponent(b));
                Some(min_distance(&g, strategy, limit)?)
            }
            None => None,
        };
        lap("mindist", &mut clock);

        let gamma = b.min_column_weight();
        let girth_value = match algebraic {
            GirthBound::Exact(g) => g,
            GirthBound::AtLeast(g) => g,
        };
        let mut chordless_up_to = if girth_value >= 8 {
            10
        } else if chordfree.as_ref().is_some_and(|c| c.free) {
            8
        } else {
            girth_value.min(6)
        };
        if chordless_up_to == 10 {
            if let Some(g) = &graph {
                if find_cycles_wc(g, 12)?.is_empty() {
                    chordless_up_to = 12;
                }
            }
        }
        let bounds = BoundsInfo {
            gamma,
            chordless_up_to,
            // 4-cycles leave only the trivial bound for nonzero columns
            dmin_bound: if girth_value >= 6 { dmin_bound(gamma, girth_value, chordless_up_to) } else { gamma.min(2) },
            min_a: if gamma >= 3 { (0..=gamma).map(|x| min_a(gamma, x)).collect() } else { Vec::new() },
        };
        lap("bounds", &mut clock);

        Ok(Self {
            schema: SCHEMA,
            input: InputInfo {
                path: path.to_string(),
                digest: digest(b),
                rows: b.rows(),
                cols: b.cols(),
                lifting: b.lifting(),
                single_edge: b.is_single_edge(),
                min_column_weight: gamma,
            },
            validation,
            girth,
            chordfree,
            ets,
            mindist,
            bounds,
            status: if inconsistencies.is_empty() { "OK" } else { "INCONSISTENT" },
            inconsistencies,
            timing_ms: opts.timing.then_some(timing),
        })
    }

    pub fn is_consistent(&self) -> bool {
        self.inconsistencies.is_empty()
    }

    /// Girth as far as it is known: exact, or the lower bound.
    pub fn girth_value(&self) -> usize {
        match self.girth.algebraic {
            GirthBound::Exact(g) | GirthBound::AtLeast(g) => g,
        }
    }

    pub fn is_chordfree(&self) -> bool {
        self.chordfree.as_ref().is_some_and(|c| c.free)
    }

    pub fn human(&self) -> String {
        let mut out = String::new();
        let i = &self.input;
        out += &format!(
            "matrix: {}x{} N={} {} ({})\n",
            i.rows,
            i.cols,
            i.lifting,
            if i.single_edge { "single-edge" } else { "multiple-edge" },
            i.path
        );
        if self.validation.is_ok() {
            out += "validation: ok\n";
        } else {
            for v in &self.validation.violations {
                out += &format!("validation: {v}\n");
            }
        }
        let alg = match self.girth.algebraic {
            GirthBound::Exact(g) => g.to_string(),
            GirthBound::AtLeast(g) => format!(">= {g}"),
        };
        let oracle = match (self.girth.oracle_run, self.girth.oracle) {
            (false, _) => "not run".to_string(),
            (true, Some(g)) => g.to_string(),
            (true, None) => "acyclic".to_string(),
        };
        out += &format!("girth: algebraic {alg}, oracle {oracle}\n");
        if let Some(w) = &self.girth.four_cycle_witness {
            out += &format!("4-cycle witness: {}\n", walk_text(w));
        }
        match &self.chordfree {
            None => out += "chord-free: not applicable (4-cycles)\n",
            Some(c) => {
                let pairs = c
                    .oracle_8wc_pairs
                    .map_or("oracle not run".to_string(), |p| format!("oracle {p} pairs"));
                out += &format!(
                    "chord-free: {} ({} violations, {} degenerate; {pairs})\n",
                    if c.free { "yes" } else { "no" },
                    c.violations,
                    c.degenerate
                );
                for w in &c.witnesses {
                    out += &format!(
                        "  shared path row {} columns {}-{}: {} | {}\n",
                        w.row,
                        w.columns.0,
                        w.columns.1,
                        walk_text(&w.first),
                        walk_text(&w.second)
                    );
                }
            }
        }
        if let Some(e) = &self.ets {
            out += &format!("ETS census (a <= {}, b <= {}, connected):\n", e.a_max, e.b_max);
            if e.census.is_empty() {
                out += "  none\n";
            }
            for r in &e.census {
                out += &format!(
                    "  ({},{}): {} sets in {} orbits, min |E| {}, {} with an 8-cycle-wc\n",
                    r.a, r.b, r.count, r.orbits, r.min_edges, r.with_8wc
                );
            }
        }
        if let Some(m) = &self.mindist {
            out += &format!("minimum distance: {}\n", distance_text(m));
        }
        out += &format!(
            "bounds: gamma {}, chordless up to {}, d_min >= {}\n",
            self.bounds.gamma, self.bounds.chordless_up_to, self.bounds.dmin_bound
        );
        out += &format!("status: {}\n", self.status);
        for x in &self.inconsistencies {
            out += &format!("  {x}\n");
        }
        out
    }
}

pub fn walk_text(w: &CycleWalk) -> String {
    w.edges()
        .iter()
        .map(|e| format!("({},{},{})", e.row, e.col, e.idx))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn distance_text(m: &MinDistance) -> String {
    use qclc::mindist::Distance;
    let how = match m.strategy {
        Strategy::Enumerate => "enumerate",
        Strategy::EvenSubgraph => "even-subgraph",
        Strategy::Auto => "auto",
    };
    match &m.distance {
        Distance::Exact { value, .. } => format!("{value} ({how}, dimension {})", m.dimension),
        Distance::AboveLimit { limit } => format!("> {limit} ({how}, dimension {})", m.dimension),
        Distance::NoCodeword => "no nonzero codeword (dimension 0)".to_string(),
    }
}
