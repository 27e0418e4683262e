//! Bundled published matrices.

use crate::compact::CompactSpec;
use crate::matrix::ExponentMatrix;
use crate::text::parse_text;

/// A compact matrix with its parameters and, when known, its published
/// minimum distance.
#[derive(Debug, Clone)]
pub struct CompactFixture {
    pub gamma: usize,
    pub n: usize,
    pub spec: CompactSpec,
    pub dmin: Option<usize>,
    /// The same matrix as shipped in text form.
    pub text: &'static str,
}

impl CompactFixture {
    pub fn matrix(&self) -> ExponentMatrix {
        parse_text(self.text).expect("bundled fixture parses").1
    }

    pub fn label(&self) -> String {
        format!("({},{}) N={}", self.gamma, self.n, self.spec.lifting)
    }
}

const SMALL_CSV: &str = include_str!("../fixtures/compact_small.csv");
const LARGE_CSV: &str = include_str!("../fixtures/compact_large.csv");

macro_rules! compact_texts {
    ($($g:literal $n:literal),* $(,)?) => {
        &[$((($g, $n), include_str!(concat!("../fixtures/compact/g", $g, "_n", $n, ".txt")))),*]
    };
}

const TEXTS: &[((&str, &str), &str)] = compact_texts!(
    "3" "05", "3" "06", "3" "07", "3" "08", "3" "09", "3" "10", "3" "11", "3" "12",
    "3" "13", "3" "14", "3" "15", "3" "16", "3" "17", "3" "18",
    "4" "05", "4" "06", "4" "07", "4" "08", "4" "09", "4" "10", "4" "11", "4" "12",
);

pub const PBRL: &str = include_str!("../fixtures/pbrl.txt");
/// [`PBRL`] with degree-1 columns appended to rows 2..8.
pub const PBRL_EXTENDED: &str = include_str!("../fixtures/pbrl_extended.txt");
pub const SIDON_TEMPLATE: &str = include_str!("../fixtures/sidon.txt");
pub const SIDON_SET: [u32; 7] = [0, 6, 9, 10, 21, 23, 28];
pub const SIDON_MODULUS: u32 = 48;

fn numbers(field: &str) -> Vec<u32> {
    field
        .split_whitespace()
        .map(|t| t.parse().expect("fixture CSV integer"))
        .collect()
}

fn parse_csv(src: &'static str) -> Vec<CompactFixture> {
    src.lines()
        .skip(1)
        .filter(|l| !l.trim().is_empty())
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            let gamma: usize = f[0].parse().unwrap();
            let n: usize = f[1].parse().unwrap();
            let spec = CompactSpec::new(numbers(f[3]), numbers(f[2]), f[4].parse().unwrap())
                .expect("fixture spec is valid");
            let key = (gamma.to_string(), format!("{n:02}"));
            let text = TEXTS
                .iter()
                .find(|((g, m), _)| *g == key.0 && *m == key.1)
                .map(|(_, t)| *t)
                .expect("fixture text present");
            CompactFixture {
                gamma,
                n,
                spec,
                dmin: f.get(5).map(|d| d.parse().unwrap()),
                text,
            }
        })
        .collect()
}

/// Ten compact matrices with published minimum distances.
pub fn compact_small() -> Vec<CompactFixture> {
    parse_csv(SMALL_CSV)
}

/// Twelve longer compact matrices.
pub fn compact_large() -> Vec<CompactFixture> {
    parse_csv(LARGE_CSV)
}

pub fn pbrl() -> ExponentMatrix {
    parse_text(PBRL).unwrap().1
}

pub fn pbrl_extended() -> ExponentMatrix {
    parse_text(PBRL_EXTENDED).unwrap().1
}

pub fn sidon_template() -> ExponentMatrix {
    parse_text(SIDON_TEMPLATE).unwrap().1
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compact::build_compact;

    #[test]
    fn texts_match_specs() {
        let all: Vec<CompactFixture> = compact_small().into_iter().chain(compact_large()).collect();
        assert_eq!(all.len(), 22);
        for f in &all {
            assert_eq!(f.matrix(), build_compact(&f.spec).unwrap(), "{}", f.label());
            assert_eq!((f.spec.gamma(), f.spec.n()), (f.gamma, f.n));
        }
    }

    #[test]
    fn special_matrices_parse() {
        assert_eq!((pbrl().rows(), pbrl().cols(), pbrl().lifting()), (9, 6, 78));
        let ext = pbrl_extended();
        assert_eq!((ext.rows(), ext.cols()), (9, 13));
        assert_eq!(ext.submatrix(&(0..9).collect::<Vec<_>>(), &(0..6).collect::<Vec<_>>()), pbrl());
        let s = sidon_template();
        assert_eq!((s.rows(), s.cols(), s.lifting()), (3, 9, 48));
        assert_eq!(s.regular_column_weight(), Some(3));
    }
}
