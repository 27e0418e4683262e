use qclc::bounds::{analytic_min_a, min_a, BOUND_TABLE};
use qclc::chord::check_chordfree;
use qclc::compact::build_compact;
use qclc::cycles::{is_four_cycle_free, DEFAULT_GIRTH_CAP};
use qclc::fixtures::{
    compact_large, compact_small, pbrl, pbrl_extended, sidon_template, CompactFixture, SIDON_MODULUS,
    SIDON_SET,
};
use qclc::mindist::{min_distance, Distance, Strategy};
use qclc::sidon::{is_sidon, pair_sums};
use qclc::tanner::{count_8wc, TannerGraph};
use qclc::{algebraic_girth, validate, BaseMatrix, ExponentMatrix, GirthBound};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Target {
    Table1,
    Table2,
    Table3,
    Example3,
    Example4,
}

/// One compared quantity.
#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub item: String,
    pub quantity: String,
    pub expected: String,
    pub computed: String,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct Summary {
    pub schema: &'static str,
    pub target: String,
    pub rows: Vec<Row>,
    pub mismatches: usize,
}

impl Summary {
    pub fn human(&self) -> String {
        let mut out = format!("{:<24} {:<16} {:>10} {:>10}  ok\n", "item", "quantity", "expected", "computed");
        for r in &self.rows {
            out += &format!(
                "{:<24} {:<16} {:>10} {:>10}  {}\n",
                r.item,
                r.quantity,
                r.expected,
                r.computed,
                if r.ok { "yes" } else { "NO" }
            );
        }
        out += &format!("{}: {} checks, {} mismatches\n", self.target, self.rows.len(), self.mismatches);
        out
    }
}

struct Rows(Vec<Row>);

impl Rows {
    fn push(&mut self, item: &str, quantity: &str, expected: impl ToString, computed: impl ToString) {
        let (expected, computed) = (expected.to_string(), computed.to_string());
        self.0.push(Row {
            item: item.to_string(),
            quantity: quantity.to_string(),
            ok: expected == computed,
            expected,
            computed,
        });
    }
}

fn girth_text(g: GirthBound) -> String {
    match g {
        GirthBound::Exact(g) => g.to_string(),
        GirthBound::AtLeast(g) => format!(">={g}"),
    }
}

/// Validity, girth both ways and chord-freedom both ways.
fn structure(rows: &mut Rows, item: &str, b: &ExponentMatrix, base: Option<&BaseMatrix>) {
    if let Some(w) = base {
        let ok = validate(b, w).map(|r| r.is_ok()).unwrap_or(false);
        rows.push(item, "valid", true, ok);
    }
    let g = TannerGraph::from_exponent(b);
    rows.push(item, "girth", 6, girth_text(algebraic_girth(b, DEFAULT_GIRTH_CAP)));
    rows.push(item, "oracle girth", 6, g.bfs_girth().map_or("none".into(), |x| x.to_string()));
    if is_four_cycle_free(b) {
        let free = check_chordfree(b).map(|r| r.is_free()).unwrap_or(false);
        rows.push(item, "chord-free", true, free);
        rows.push(item, "8-cycle-wc pairs", 0, count_8wc(&g).unwrap_or(usize::MAX));
    }
}

fn compact_table(rows: &mut Rows, fixtures: &[CompactFixture], distances: bool) {
    for f in fixtures {
        let item = f.label();
        let b = f.matrix();
        let built = build_compact(&f.spec).ok();
        rows.push(&item, "seed/coeffs", true, built.as_ref() == Some(&b));
        let w = BaseMatrix::from_rows(&vec![vec![1; f.n]; f.gamma]).expect("all-ones base");
        structure(rows, &item, &b, Some(&w));
        if distances && f.n == 5 {
            let d = min_distance(&TannerGraph::from_exponent(&b), Strategy::Auto, None);
            let computed = match d.map(|d| d.distance) {
                Ok(Distance::Exact { value, .. }) => value.to_string(),
                Ok(other) => format!("{other:?}"),
                Err(e) => e.to_string(),
            };
            let expected = f.dmin.map_or("-".into(), |d| d.to_string());
            rows.push(&item, "d_min", expected, computed);
        }
    }
}

fn table1(rows: &mut Rows) {
    for (gamma, row) in BOUND_TABLE {
        let item = format!("gamma={gamma}");
        for (b, entry) in row.iter().enumerate() {
            let shown = |x: Option<usize>| x.map_or("-".into(), |a| a.to_string());
            rows.push(&item, &format!("min a, b={b}"), shown(*entry), shown(min_a(gamma, b).value));
        }
        let expected = row[0].map_or("-".into(), |a| a.to_string());
        let analytic = analytic_min_a(gamma, 0).map_or("-".into(), |a| a.to_string());
        rows.push(&item, "b=0 analytic", expected, analytic);
    }
}

pub fn run(target: Target) -> Summary {
    let mut rows = Rows(Vec::new());
    let name = match target {
        Target::Table1 => {
            table1(&mut rows);
            "table1"
        }
        Target::Table2 => {
            compact_table(&mut rows, &compact_small(), true);
            "table2"
        }
        Target::Table3 => {
            compact_table(&mut rows, &compact_large(), false);
            "table3"
        }
        Target::Example3 => {
            structure(&mut rows, "PBRL", &pbrl(), None);
            structure(&mut rows, "PBRL extended", &pbrl_extended(), None);
            "example3"
        }
        Target::Example4 => {
            let sums = pair_sums(&SIDON_SET, SIDON_MODULUS).len();
            rows.push("S1 mod 48", "distinct sums", 28, sums);
            rows.push("S1 mod 48", "Sidon", true, is_sidon(&SIDON_SET, SIDON_MODULUS));
            structure(&mut rows, "Sidon template", &sidon_template(), None);
            "example4"
        }
    };
    let mismatches = rows.0.iter().filter(|r| !r.ok).count();
    Summary {
        schema: "qclc.reproduce.v1",
        target: name.to_string(),
        rows: rows.0,
        mismatches,
    }
}
