//! Lifted parity-check matrices and alist I/O.

use crate::error::{Error, Result};
use crate::gf2::BitMatrix;
use crate::matrix::ExponentMatrix;

/// Block layout of a lifted matrix: `c x d` blocks of size `N x N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct BlockShape {
    pub block_rows: usize,
    pub block_cols: usize,
    pub lifting: usize,
}

/// Binary parity-check matrix, optionally carrying its block structure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParityCheckMatrix {
    bits: BitMatrix,
    shape: Option<BlockShape>,
}

impl ParityCheckMatrix {
    pub fn from_bits(bits: BitMatrix) -> Self {
        Self { bits, shape: None }
    }

    pub fn bits(&self) -> &BitMatrix {
        &self.bits
    }

    pub fn shape(&self) -> Option<BlockShape> {
        self.shape
    }

    pub fn rows(&self) -> usize {
        self.bits.rows()
    }

    pub fn cols(&self) -> usize {
        self.bits.cols()
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.bits.get(r, c)
    }

    pub fn rank(&self) -> usize {
        self.bits.rank()
    }

    /// Code dimension `cols - rank`.
    pub fn dimension(&self) -> usize {
        self.cols() - self.rank()
    }

    /// Row supports, ascending.
    pub fn check_neighbours(&self) -> Vec<Vec<usize>> {
        (0..self.rows()).map(|r| self.bits.row_support(r)).collect()
    }

    /// Column supports, ascending.
    pub fn variable_neighbours(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.cols()];
        for r in 0..self.rows() {
            for c in self.bits.row_support(r) {
                out[c].push(r);
            }
        }
        out
    }
}

/// Replaces every shift `b` by the circulant permutation whose top row has
/// its 1 in column `b`, and every empty cell by the zero block.
pub fn lift(b: &ExponentMatrix) -> ParityCheckMatrix {
    let n = b.lifting();
    let mut bits = BitMatrix::zeros(b.rows() * n, b.cols() * n);
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            for &s in b.cell(i, j) {
                for y in 0..n {
                    bits.set(i * n + y, j * n + (y + s as usize) % n, true);
                }
            }
        }
    }
    ParityCheckMatrix {
        bits,
        shape: Some(BlockShape {
            block_rows: b.rows(),
            block_cols: b.cols(),
            lifting: n,
        }),
    }
}

/// Writes the alist layout: `n m`, max degrees, column degrees, row degrees,
/// then 1-based column and row adjacency lists, zero-padded to the maximum
/// degree.
pub fn export_alist(h: &ParityCheckMatrix) -> String {
    let cols = h.variable_neighbours();
    let rows = h.check_neighbours();
    let max_col = cols.iter().map(Vec::len).max().unwrap_or(0);
    let max_row = rows.iter().map(Vec::len).max().unwrap_or(0);

    let join = |v: &mut dyn Iterator<Item = usize>| {
        v.map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
    };
    let mut out = String::new();
    out += &format!("{} {}\n", h.cols(), h.rows());
    out += &format!("{max_col} {max_row}\n");
    out += &join(&mut cols.iter().map(Vec::len));
    out.push('\n');
    out += &join(&mut rows.iter().map(Vec::len));
    out.push('\n');
    for (lists, width) in [(&cols, max_col), (&rows, max_row)] {
        for l in lists {
            let mut padded = l.iter().map(|x| x + 1).chain(std::iter::repeat(0));
            out += &join(&mut padded.by_ref().take(width));
            out.push('\n');
        }
    }
    out
}

/// Reads an alist file back into a matrix (no block metadata).
pub fn import_alist(source: &str) -> Result<ParityCheckMatrix> {
    let mut lines = source
        .lines()
        .enumerate()
        .map(|(n, l)| (n + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let mut next_nums = |what: &str| -> Result<(usize, Vec<usize>)> {
        let (ln, l) = lines.next().ok_or_else(|| Error::Parse {
            line: 0,
            msg: format!("unexpected end of alist while reading {what}"),
        })?;
        let nums = l
            .split_whitespace()
            .map(|t| {
                t.parse().map_err(|_| Error::Parse {
                    line: ln,
                    msg: format!("bad integer '{t}' in {what}"),
                })
            })
            .collect::<Result<Vec<usize>>>()?;
        Ok((ln, nums))
    };
    let (ln, dims) = next_nums("dimensions")?;
    let [ncols, nrows] = dims[..] else {
        return Err(Error::Parse {
            line: ln,
            msg: "expected 'n m'".into(),
        });
    };
    next_nums("max degrees")?;
    let (_, col_deg) = next_nums("column degrees")?;
    let (_, row_deg) = next_nums("row degrees")?;
    if col_deg.len() != ncols || row_deg.len() != nrows {
        return Err(Error::Parse {
            line: ln,
            msg: "degree list length mismatch".into(),
        });
    }
    let mut bits = BitMatrix::zeros(nrows, ncols);
    for (c, &deg) in col_deg.iter().enumerate() {
        let (ln, list) = next_nums("column list")?;
        let entries: Vec<usize> = list.into_iter().filter(|&x| x != 0).collect();
        if entries.len() != deg || entries.iter().any(|&r| r > nrows) {
            return Err(Error::Parse {
                line: ln,
                msg: format!("column {} list does not match degree {deg}", c + 1),
            });
        }
        for r in entries {
            bits.set(r - 1, c, true);
        }
    }
    for (r, &deg) in row_deg.iter().enumerate() {
        let (ln, list) = next_nums("row list")?;
        let entries: Vec<usize> = list.into_iter().filter(|&x| x != 0).collect();
        if entries.len() != deg || entries.iter().any(|&c| c == 0 || c > ncols || !bits.get(r, c - 1)) {
            return Err(Error::Parse {
                line: ln,
                msg: format!("row {} list disagrees with column lists", r + 1),
            });
        }
    }
    Ok(ParityCheckMatrix::from_bits(bits))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_shift_is_identity() {
        let h = lift(&ExponentMatrix::from_shifts(3, &[vec![0]]).unwrap());
        for r in 0..3 {
            for c in 0..3 {
                assert_eq!(h.get(r, c), r == c);
            }
        }
    }

    #[test]
    fn shift_one_is_right_cyclic() {
        let h = lift(&ExponentMatrix::from_shifts(3, &[vec![1]]).unwrap());
        let rows: Vec<Vec<bool>> = (0..3).map(|r| (0..3).map(|c| h.get(r, c)).collect()).collect();
        assert_eq!(rows[0], vec![false, true, false]);
        assert_eq!(rows[1], vec![false, false, true]);
        assert_eq!(rows[2], vec![true, false, false]);
    }

    #[test]
    fn double_edge_block_has_weight_two() {
        let h = lift(&ExponentMatrix::new(4, vec![vec![vec![0, 1]]]).unwrap());
        for k in 0..4 {
            assert_eq!(h.bits().row_weight(k), 2);
            assert_eq!(h.bits().col_weight(k), 2);
        }
    }

    #[test]
    fn empty_cell_is_zero_block() {
        let b = ExponentMatrix::from_single_edge(3, &[vec![Some(0), None]]).unwrap();
        let h = lift(&b);
        assert!((0..3).all(|r| (3..6).all(|c| !h.get(r, c))));
    }

    #[test]
    fn identity_alist_has_unit_degrees() {
        let h = lift(&ExponentMatrix::from_shifts(3, &[vec![0]]).unwrap());
        assert_eq!(
            export_alist(&h),
            "3 3\n1 1\n1 1 1\n1 1 1\n1\n2\n3\n1\n2\n3\n"
        );
    }

    #[test]
    fn two_by_two_lift_alist() {
        let b = ExponentMatrix::from_shifts(2, &[vec![0, 1], vec![1, 0]]).unwrap();
        let h = lift(&b);
        assert_eq!((h.rows(), h.cols()), (4, 4));
        let alist = export_alist(&h);
        let lines: Vec<&str> = alist.lines().collect();
        assert_eq!(lines[0], "4 4");
        assert_eq!(lines[3], "2 2 2 2");
        assert_eq!(import_alist(&alist).unwrap().bits(), h.bits());
    }

    #[test]
    fn alist_round_trip_with_padding() {
        let b = ExponentMatrix::new(
            5,
            vec![
                vec![vec![0], vec![1, 3], vec![]],
                vec![vec![], vec![2], vec![4]],
            ],
        )
        .unwrap();
        let h = lift(&b);
        let back = import_alist(&export_alist(&h)).unwrap();
        assert_eq!(back.bits(), h.bits());
    }

    #[test]
    fn malformed_alist_rejected() {
        assert!(import_alist("2 1\n1 2\n1 1\n2\n1\n").is_err());
        assert!(import_alist("2 1\n1 2\n1 1\n2\n1\n3\n1 2\n").is_err());
    }
}
