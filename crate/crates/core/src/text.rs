//! Plain-text exponent-matrix format.
//!
//! ```text
//! c d N
//! <c lines of d whitespace-separated entries>
//! ```
//!
//! An entry is `inf` for an empty cell or comma-separated shifts such as
//! `0,27`. Blank lines and lines starting with `#` are skipped on input and
//! never written.

use crate::error::{Error, Result};
use crate::matrix::{BaseMatrix, ExponentMatrix};

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn content_lines(source: &str) -> impl Iterator<Item = (usize, &str)> {
    source
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(tok: &str, line: usize, what: &str) -> Result<usize> {
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what} '{tok}'")))
}

/// Parses an exponent matrix; the base matrix is inferred from cell lengths.
pub fn parse_text(source: &str) -> Result<(BaseMatrix, ExponentMatrix)> {
    let mut lines = content_lines(source);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 3 {
        return Err(parse_err(hline, "header must be 'c d N'"));
    }
    let c = parse_usize(toks[0], hline, "row count")?;
    let d = parse_usize(toks[1], hline, "column count")?;
    let n = parse_usize(toks[2], hline, "lifting degree")?;
    if c == 0 || d == 0 {
        return Err(parse_err(hline, "matrix dimensions must be positive"));
    }
    if n < 2 {
        return Err(parse_err(hline, format!("lifting degree must be >= 2, got {n}")));
    }

    let mut rows = Vec::with_capacity(c);
    for i in 0..c {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_err(hline + i + 1, format!("expected {c} rows, got {i}")))?;
        let entries: Vec<&str> = line.split_whitespace().collect();
        if entries.len() != d {
            return Err(parse_err(
                ln,
                format!("expected {d} entries, got {}", entries.len()),
            ));
        }
        let mut row = Vec::with_capacity(d);
        for (j, e) in entries.into_iter().enumerate() {
            row.push(parse_entry(e, n, ln, j)?);
        }
        rows.push(row);
    }
    if let Some((ln, _)) = lines.next() {
        return Err(parse_err(ln, "trailing content after matrix rows"));
    }
    let b = ExponentMatrix::new(n, rows).map_err(|e| parse_err(hline, e.to_string()))?;
    Ok((b.base(), b))
}

fn parse_entry(entry: &str, n: usize, line: usize, col: usize) -> Result<Vec<u32>> {
    if entry == "inf" {
        return Ok(Vec::new());
    }
    let mut shifts = Vec::new();
    for tok in entry.split(',') {
        let s: u32 = tok
            .parse()
            .map_err(|_| parse_err(line, format!("bad shift '{tok}' in column {col}")))?;
        if s as usize >= n {
            return Err(parse_err(
                line,
                format!("shift {s} >= N={n} in column {col}"),
            ));
        }
        if shifts.contains(&s) {
            return Err(parse_err(
                line,
                format!("duplicate shift {s} in column {col}"),
            ));
        }
        shifts.push(s);
    }
    Ok(shifts)
}

/// Canonical text form: single spaces, sorted shifts, trailing newline.
pub fn serialize_text(b: &ExponentMatrix) -> String {
    let mut out = format!("{} {} {}\n", b.rows(), b.cols(), b.lifting());
    for i in 0..b.rows() {
        let row: Vec<String> = (0..b.cols())
            .map(|j| {
                let cell = b.cell(i, j);
                if cell.is_empty() {
                    "inf".to_string()
                } else {
                    cell.iter()
                        .map(u32::to_string)
                        .collect::<Vec<_>>()
                        .join(",")
                }
            })
            .collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parses a base matrix: header `c d`, then `c` rows of `d` weights.
pub fn parse_base_text(source: &str) -> Result<BaseMatrix> {
    let mut lines = content_lines(source);
    let (hline, header) = lines.next().ok_or_else(|| parse_err(1, "empty input"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() != 2 {
        return Err(parse_err(hline, "header must be 'c d'"));
    }
    let c = parse_usize(toks[0], hline, "row count")?;
    let d = parse_usize(toks[1], hline, "column count")?;
    let mut weights = Vec::with_capacity(c * d);
    for i in 0..c {
        let (ln, line) = lines
            .next()
            .ok_or_else(|| parse_err(hline + i + 1, format!("expected {c} rows, got {i}")))?;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != d {
            return Err(parse_err(ln, format!("expected {d} weights, got {}", toks.len())));
        }
        for t in toks {
            weights.push(
                t.parse()
                    .map_err(|_| parse_err(ln, format!("bad weight '{t}'")))?,
            );
        }
    }
    BaseMatrix::new(c, d, weights).map_err(|e| parse_err(hline, e.to_string()))
}

pub fn serialize_base_text(w: &BaseMatrix) -> String {
    let mut out = format!("{} {}\n", w.rows(), w.cols());
    for i in 0..w.rows() {
        let row: Vec<String> = (0..w.cols()).map(|j| w.weight(i, j).to_string()).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_minimal() {
        let (w, b) = parse_text("1 1 3\n0\n").unwrap();
        assert_eq!(b.lifting(), 3);
        assert_eq!(b.cell(0, 0), &[0]);
        assert_eq!(w.weight(0, 0), 1);
    }

    #[test]
    fn parses_multi_edge_and_empty() {
        let (w, b) = parse_text("1 2 78\n0,27 inf\n").unwrap();
        assert_eq!(b.cell(0, 0), &[0, 27]);
        assert!(b.is_empty_cell(0, 1));
        assert_eq!((w.weight(0, 0), w.weight(0, 1)), (2, 0));
    }

    #[test]
    fn canonical_round_trip() {
        let s = "2 3 78\n0 0 0,27\n0,4 21,61 inf\n";
        let (_, b) = parse_text(s).unwrap();
        assert_eq!(serialize_text(&b), s);
    }

    #[test]
    fn unsorted_cell_is_canonicalised() {
        let (_, b) = parse_text("1 1 78\n27,0\n").unwrap();
        assert_eq!(serialize_text(&b), "1 1 78\n0,27\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert_eq!(
            parse_text("1 2 5\n0 5\n"),
            Err(Error::Parse {
                line: 2,
                msg: "shift 5 >= N=5 in column 1".into()
            })
        );
        match parse_text("2 1 5\n0\n1,1\n") {
            Err(Error::Parse { line: 3, msg }) => assert!(msg.contains("duplicate")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            parse_text("1 2 5\n0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_text("1 1 1\n0\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_text("1 1 5\nx\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_text("1 1 5\n0\n0\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn comments_and_blank_lines_skipped() {
        let (_, b) = parse_text("# header\n1 2 7\n\n0 3\n").unwrap();
        assert_eq!(serialize_text(&b), "1 2 7\n0 3\n");
    }

    #[test]
    fn base_text_round_trip() {
        let s = "2 3\n1 2 0\n0 1 1\n";
        let w = parse_base_text(s).unwrap();
        assert_eq!(w.weight(0, 1), 2);
        assert_eq!(serialize_base_text(&w), s);
    }

    fn arb_matrix() -> impl Strategy<Value = ExponentMatrix> {
        (1usize..4, 1usize..5, 2usize..20).prop_flat_map(|(c, d, n)| {
            proptest::collection::vec(
                proptest::collection::btree_set(0..n as u32, 0..3),
                c * d,
            )
            .prop_map(move |cells| {
                let rows = cells
                    .chunks(d)
                    .map(|r| r.iter().map(|s| s.iter().copied().collect()).collect())
                    .collect();
                ExponentMatrix::new(n, rows).unwrap()
            })
        })
    }

    proptest! {
        #[test]
        fn serialize_parse_identity(b in arb_matrix()) {
            let s = serialize_text(&b);
            let (w, back) = parse_text(&s).unwrap();
            prop_assert_eq!(&back, &b);
            prop_assert_eq!(w, b.base());
            prop_assert_eq!(serialize_text(&back), s);
        }
    }
}
