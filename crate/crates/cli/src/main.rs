//! `qclc`: check, search and analyse QC-LDPC exponent matrices.
//!
//! Exit codes: 0 success, 1 a required property fails (or nothing was
//! found, or a reproduction mismatches), 2 bad input or parameters, 3 the
//! algebraic and graph checks disagree.

mod report;
mod reproduce;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qclc::bounds::{b_lower_bound, dmin_bound, edge_bound, min_a, table_entry};
use qclc::cycles::DEFAULT_GIRTH_CAP;
use qclc::ets::{census, census_csv, enumerate_ets};
use qclc::mindist::{min_distance, Strategy};
use qclc::tanner::TannerGraph;
use qclc::{
    algebraic_girth, export_alist, lift, parse_text, search, serialize_text, BaseMatrix, Criterion,
    ExponentMatrix, GirthBound, SearchConfig, SearchMode,
};
use report::{distance_text, Options, Report};
use serde::Serialize;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INCONSISTENT: u8 = 3;

#[derive(Parser)]
#[command(name = "qclc", version, about = "QC-LDPC exponent matrices with chordless short cycles")]
struct Cli {
    /// Worker threads; 0 uses every core.
    #[arg(long, global = true, env = "QCLC_WORKERS", default_value_t = 0)]
    workers: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OracleArgs {
    /// Force the Tanner-graph oracle on.
    #[arg(long, conflicts_with = "no_oracle")]
    oracle: bool,
    /// Skip the Tanner-graph oracle.
    #[arg(long)]
    no_oracle: bool,
}

impl OracleArgs {
    fn choice(&self) -> Option<bool> {
        match (self.oracle, self.no_oracle) {
            (true, _) => Some(true),
            (_, true) => Some(false),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Auto,
    Enumerate,
    EvenSubgraph,
}

impl From<StrategyArg> for Strategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Auto => Strategy::Auto,
            StrategyArg::Enumerate => Strategy::Enumerate,
            StrategyArg::EvenSubgraph => Strategy::EvenSubgraph,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Validate a matrix and test girth and chord-freedom.
    Check {
        file: PathBuf,
        /// Fail unless the girth is at least this value.
        #[arg(long, default_value_t = 6)]
        require_girth: usize,
        /// Fail unless the code has no 8-cycle with a chord.
        #[arg(long)]
        require_chordfree: bool,
        #[command(flatten)]
        oracle: OracleArgs,
        /// Write the JSON report here instead of printing text.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long, default_value_t = 5)]
        max_witnesses: usize,
    },
    /// Search for the smallest lifting degree admitting a chord-free matrix.
    Search {
        #[arg(long)]
        gamma: usize,
        #[arg(short = 'n', long = "n")]
        n: usize,
        #[arg(long, conflicts_with = "general", required_unless_present = "general")]
        compact: bool,
        #[arg(long)]
        general: bool,
        #[arg(long = "min-N", default_value_t = 2)]
        min_n: usize,
        #[arg(long = "max-N")]
        max_n: usize,
        /// Wall-clock budget; unfinished liftings stay unsettled.
        #[arg(long)]
        budget_secs: Option<f64>,
        /// Check only 3x3 and 3x4 submatrices instead of the full condition.
        #[arg(long)]
        band: bool,
        /// Compact mode: also require the coefficient corollary.
        #[arg(long)]
        corollary: bool,
        #[arg(long)]
        json: Option<PathBuf>,
    },
    /// Expand to the binary parity-check matrix.
    Lift {
        file: PathBuf,
        /// Write the alist here; otherwise it goes to stdout.
        #[arg(long)]
        alist: Option<PathBuf>,
    },
    /// Algebraic girth, with the oracle on small codes.
    Girth {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_GIRTH_CAP)]
        cap: usize,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Census of connected elementary trapping sets.
    Ets {
        file: PathBuf,
        #[arg(long, default_value_t = 8)]
        a_max: usize,
        #[arg(long, default_value_t = 2)]
        b_max: usize,
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Print every set as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Minimum distance of the lifted code.
    Mindist {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "auto")]
        strategy: StrategyArg,
        /// Only look for codewords up to this weight.
        #[arg(long)]
        limit: Option<usize>,
    },
    /// Trapping-set and distance bounds for column weight gamma.
    Bounds {
        #[arg(long)]
        gamma: usize,
    },
    /// Full report: structure, optional ETS census and distance.
    Report {
        file: PathBuf,
        #[arg(long)]
        json: bool,
        /// Include an ETS census with these limits.
        #[arg(long, num_args = 2, value_names = ["A_MAX", "B_MAX"])]
        ets: Option<Vec<usize>>,
        #[arg(long)]
        mindist: bool,
        /// Include wall-clock timings (makes output nondeterministic).
        #[arg(long)]
        timing: bool,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Re-run the checks behind a bundled table or example.
    Reproduce {
        #[arg(value_enum)]
        target: reproduce::Target,
        #[arg(long)]
        json: bool,
    },
}

/// An error that ends the run with the given code.
struct Failure(u8, String);

impl From<qclc::Error> for Failure {
    fn from(e: qclc::Error) -> Self {
        Failure(EXIT_USAGE, e.to_string())
    }
}

type Outcome = Result<u8, Failure>;

fn read_matrix(path: &Path) -> Result<(BaseMatrix, ExponentMatrix), Failure> {
    let src = fs::read_to_string(path).map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))?;
    parse_text(&src).map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    fs::write(path, contents).map_err(|e| Failure(EXIT_USAGE, format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("report types serialize") + "\n"
}

#[derive(Serialize)]
struct CheckResult<'a> {
    schema: &'static str,
    report: &'a Report,
    failures: Vec<String>,
    exit_code: u8,
}

fn check_exit(report: &Report, require_girth: usize, require_chordfree: bool) -> (u8, Vec<String>) {
    if !report.is_consistent() {
        return (EXIT_INCONSISTENT, report.inconsistencies.clone());
    }
    let mut failures: Vec<String> = report.validation.violations.iter().map(|v| v.to_string()).collect();
    if report.girth_value() < require_girth {
        let shown = match report.girth.algebraic {
            GirthBound::Exact(g) => g.to_string(),
            GirthBound::AtLeast(g) => format!(">= {g}"),
        };
        failures.push(format!("girth {shown} below {require_girth}"));
    }
    if require_chordfree && !report.is_chordfree() {
        failures.push("not free of 8-cycles with a chord".into());
    }
    (if failures.is_empty() { 0 } else { EXIT_FAIL }, failures)
}

fn cmd_check(
    file: &Path,
    require_girth: usize,
    require_chordfree: bool,
    oracle: Option<bool>,
    json: Option<&Path>,
    max_witnesses: usize,
) -> Outcome {
    let (base, b) = read_matrix(file)?;
    let opts = Options {
        oracle,
        max_witnesses,
        ..Options::default()
    };
    let report = Report::build(&file.display().to_string(), &base, &b, &opts)?;
    let (code, failures) = check_exit(&report, require_girth, require_chordfree);
    match json {
        Some(path) => write_file(
            path,
            &to_json(&CheckResult {
                schema: "qclc.check.v1",
                report: &report,
                failures: failures.clone(),
                exit_code: code,
            }),
        )?,
        None => print!("{}", report.human()),
    }
    for f in &failures {
        eprintln!("check failed: {f}");
    }
    Ok(code)
}

#[derive(Serialize)]
struct SearchJson<'a> {
    schema: &'static str,
    #[serde(flatten)]
    outcome: &'a qclc::SearchOutcome,
}

#[allow(clippy::too_many_arguments)]
fn cmd_search(
    gamma: usize,
    n: usize,
    general: bool,
    min_n: usize,
    max_n: usize,
    budget_secs: Option<f64>,
    band: bool,
    corollary: bool,
    json: Option<&Path>,
    workers: usize,
) -> Outcome {
    let mode = if general { SearchMode::General } else { SearchMode::Compact };
    if corollary && general {
        return Err(Failure(EXIT_USAGE, "--corollary applies to compact search only".into()));
    }
    let mut cfg = SearchConfig::new(gamma, n, max_n, mode);
    cfg.lifting_min = min_n;
    cfg.criterion = if band { Criterion::Band } else { Criterion::Global };
    cfg.require_corollary = corollary;
    cfg.workers = workers;
    cfg.budget = match budget_secs {
        Some(s) if s.is_finite() && s >= 0.0 => Some(Duration::from_secs_f64(s)),
        Some(s) => return Err(Failure(EXIT_USAGE, format!("bad budget {s}"))),
        None => None,
    };
    let outcome = search(&cfg)?;
    if let Some(path) = json {
        write_file(
            path,
            &to_json(&SearchJson {
                schema: "qclc.search.v1",
                outcome: &outcome,
            }),
        )?;
    }
    let found_at = outcome.found.as_ref().map(|f| f.matrix.lifting());
    let listed = |exhausted: bool| -> Vec<String> {
        outcome
            .per_lifting
            .iter()
            .filter(|s| s.exhausted == exhausted && Some(s.lifting) != found_at)
            .map(|s| s.lifting.to_string())
            .collect()
    };
    let (settled, unsettled) = (listed(true), listed(false));
    if !settled.is_empty() {
        eprintln!("no matrix for N in {{{}}} (exhaustive)", settled.join(","));
    }
    if !unsettled.is_empty() {
        eprintln!("budget ran out; unsettled N: {{{}}}", unsettled.join(","));
    }
    match &outcome.found {
        Some(f) => {
            print!("{}", serialize_text(&f.matrix));
            let c = &f.certificate;
            eprintln!(
                "found N={}; certificate {}: 4-cycle-free {}, chord-free {}, oracle girth {:?}, oracle 8-cycle-wc pairs {:?}",
                f.matrix.lifting(),
                if c.holds() { "holds" } else { "FAILS" },
                c.four_cycle_free,
                c.chordfree,
                c.oracle_girth,
                c.oracle_8wc_pairs,
            );
            Ok(if c.holds() { 0 } else { EXIT_INCONSISTENT })
        }
        None => Ok(EXIT_FAIL),
    }
}

fn cmd_lift(file: &Path, alist: Option<&Path>) -> Outcome {
    let (_, b) = read_matrix(file)?;
    let text = export_alist(&lift(&b));
    match alist {
        Some(path) => write_file(path, &text)?,
        None => print!("{text}"),
    }
    Ok(0)
}

fn cmd_girth(file: &Path, cap: usize, oracle: Option<bool>) -> Outcome {
    let (_, b) = read_matrix(file)?;
    let alg = algebraic_girth(&b, cap);
    let run = oracle.unwrap_or(b.cols() * b.lifting() <= report::ORACLE_DEFAULT_MAX_VARS);
    match alg {
        GirthBound::Exact(g) => println!("algebraic girth {g}"),
        GirthBound::AtLeast(g) => println!("algebraic girth >= {g}"),
    }
    if !run {
        return Ok(0);
    }
    let got = TannerGraph::from_exponent(&b).bfs_girth();
    println!("oracle girth {}", got.map_or("none (acyclic)".into(), |g| g.to_string()));
    let agree = match alg {
        GirthBound::Exact(g) => got == Some(g),
        GirthBound::AtLeast(g) => got.is_none_or(|o| o >= g),
    };
    if agree {
        Ok(0)
    } else {
        eprintln!("INCONSISTENT: algebraic and oracle girth differ");
        Ok(EXIT_INCONSISTENT)
    }
}

fn cmd_ets(file: &Path, a_max: usize, b_max: usize, csv: Option<&Path>, json: bool) -> Outcome {
    let (_, b) = read_matrix(file)?;
    let g = TannerGraph::from_exponent(&b);
    let records = enumerate_ets(&g, a_max, b_max);
    let rows = census(&records);
    if let Some(path) = csv {
        write_file(path, &census_csv(&rows))?;
    }
    if json {
        #[derive(Serialize)]
        struct EtsJson<'a> {
            schema: &'static str,
            a_max: usize,
            b_max: usize,
            census: &'a [qclc::ets::CensusRow],
            sets: &'a [qclc::TrappingSetRecord],
        }
        print!(
            "{}",
            to_json(&EtsJson {
                schema: "qclc.ets.v1",
                a_max,
                b_max,
                census: &rows,
                sets: &records,
            })
        );
    } else {
        println!("connected ETS with a <= {a_max}, b <= {b_max}:");
        if rows.is_empty() {
            println!("  none");
        }
        for r in &rows {
            println!(
                "  ({},{}): {} sets in {} orbits, min |E| {}, {} with an 8-cycle-wc",
                r.a, r.b, r.count, r.orbits, r.min_edges, r.with_8wc
            );
        }
    }
    Ok(0)
}

fn cmd_mindist(file: &Path, strategy: Strategy, limit: Option<usize>) -> Outcome {
    let (_, b) = read_matrix(file)?;
    let d = min_distance(&TannerGraph::from_exponent(&b), strategy, limit)?;
    println!("{}", distance_text(&d));
    Ok(0)
}

fn cmd_bounds(gamma: usize) -> Outcome {
    if gamma < 2 {
        return Err(Failure(EXIT_USAGE, "gamma must be at least 2".into()));
    }
    let shown = |x: Option<usize>| x.map_or("-".to_string(), |a| a.to_string());
    let values: Vec<String> = (0..=gamma).map(|b| shown(min_a(gamma, b).value)).collect();
    let formula: Vec<String> = (0..=gamma).map(|b| shown(min_a(gamma, b).formula)).collect();
    let source = if table_entry(gamma, 0).is_some() { "table" } else { "formula" };
    println!("gamma {gamma}: smallest a of an (a,b) ETS, b = 0..{gamma} ({source}):");
    println!("{}", values.join(" "));
    println!("formula only: {}", formula.join(" "));
    let a_values: Vec<String> = (2..=12).map(|a| format!("{a}:{}/{}", edge_bound(a), b_lower_bound(a, gamma))).collect();
    println!("a: max |E| / min b  {}", a_values.join(" "));
    println!("d_min >= {} (girth 6, chord-free)", dmin_bound(gamma, 6, 8));
    if gamma == 3 {
        println!("d_min >= {} (girth 8, every cycle up to 12 chordless)", dmin_bound(gamma, 8, 12));
    }
    Ok(0)
}

fn cmd_report(file: &Path, json: bool, ets: Option<Vec<usize>>, mindist: bool, timing: bool, oracle: Option<bool>) -> Outcome {
    let (base, b) = read_matrix(file)?;
    let opts = Options {
        oracle,
        ets: ets.map(|v| (v[0], v[1])),
        mindist: mindist.then_some((Strategy::Auto, None)),
        timing,
        ..Options::default()
    };
    let report = Report::build(&file.display().to_string(), &base, &b, &opts)?;
    if json {
        print!("{}", to_json(&report));
    } else {
        print!("{}", report.human());
    }
    Ok(if report.is_consistent() { 0 } else { EXIT_INCONSISTENT })
}

fn cmd_reproduce(target: reproduce::Target, json: bool) -> Outcome {
    let summary = reproduce::run(target);
    if json {
        print!("{}", to_json(&summary));
    } else {
        print!("{}", summary.human());
    }
    for r in summary.rows.iter().filter(|r| !r.ok) {
        eprintln!("mismatch: {} {}: expected {}, computed {}", r.item, r.quantity, r.expected, r.computed);
    }
    Ok(if summary.mismatches == 0 { 0 } else { EXIT_FAIL })
}

fn run(cli: Cli) -> Outcome {
    if cli.workers > 0 {
        // fails only if a pool already exists, which cannot happen here
        let _ = rayon::ThreadPoolBuilder::new().num_threads(cli.workers).build_global();
    }
    match cli.command {
        Command::Check {
            file,
            require_girth,
            require_chordfree,
            oracle,
            json,
            max_witnesses,
        } => cmd_check(&file, require_girth, require_chordfree, oracle.choice(), json.as_deref(), max_witnesses),
        Command::Search {
            gamma,
            n,
            compact: _,
            general,
            min_n,
            max_n,
            budget_secs,
            band,
            corollary,
            json,
        } => cmd_search(gamma, n, general, min_n, max_n, budget_secs, band, corollary, json.as_deref(), cli.workers),
        Command::Lift { file, alist } => cmd_lift(&file, alist.as_deref()),
        Command::Girth { file, cap, oracle } => cmd_girth(&file, cap, oracle.choice()),
        Command::Ets {
            file,
            a_max,
            b_max,
            csv,
            json,
        } => cmd_ets(&file, a_max, b_max, csv.as_deref(), json),
        Command::Mindist { file, strategy, limit } => cmd_mindist(&file, strategy.into(), limit),
        Command::Bounds { gamma } => cmd_bounds(gamma),
        Command::Report {
            file,
            json,
            ets,
            mindist,
            timing,
            oracle,
        } => cmd_report(&file, json, ets, mindist, timing, oracle.choice()),
        Command::Reproduce { target, json } => cmd_reproduce(target, json),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
