//! Base matrices and exponent matrices of protograph-based QC-LDPC codes.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};

/// Edge multiplicities of a protograph, `rows x cols`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BaseMatrix {
    rows: usize,
    cols: usize,
    weights: Vec<u32>,
}

impl BaseMatrix {
    pub fn new(rows: usize, cols: usize, weights: Vec<u32>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(Error::Invalid("base matrix must be non-empty".into()));
        }
        if weights.len() != rows * cols {
            return Err(Error::Invalid(format!(
                "expected {} weights, got {}",
                rows * cols,
                weights.len()
            )));
        }
        Ok(Self {
            rows,
            cols,
            weights,
        })
    }

    pub fn from_rows(rows: &[Vec<u32>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Invalid("ragged base matrix".into()));
        }
        Self::new(rows.len(), cols, rows.concat())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn weight(&self, i: usize, j: usize) -> u32 {
        self.weights[i * self.cols + j]
    }

    /// True when every protograph cell carries at most one edge.
    pub fn is_single_edge(&self) -> bool {
        self.weights.iter().all(|&w| w <= 1)
    }

    pub fn column_weight(&self, j: usize) -> u32 {
        (0..self.rows).map(|i| self.weight(i, j)).sum()
    }

    pub fn row_weight(&self, i: usize) -> u32 {
        (0..self.cols).map(|j| self.weight(i, j)).sum()
    }
}

/// A `c x d` grid of shift vectors with lifting degree `N`.
///
/// An empty cell stands for the all-zero block (written `inf` in text form).
/// Shifts inside a cell are kept sorted ascending.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentMatrix {
    rows: usize,
    cols: usize,
    lifting: usize,
    cells: Vec<Vec<u32>>,
}

/// Serialized as `{"lifting": N, "rows": [[[shifts]]]}` with `[]` for an
/// empty cell.
impl Serialize for ExponentMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("ExponentMatrix", 2)?;
        st.serialize_field("lifting", &self.lifting)?;
        st.serialize_field("rows", &self.to_rows())?;
        st.end()
    }
}

impl ExponentMatrix {
    /// Builds a matrix from row-major cells, sorting each cell and rejecting
    /// out-of-range or repeated shifts.
    pub fn new(lifting: usize, rows: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        let m = Self::from_raw(lifting, rows)?;
        if let Some(v) = m.intrinsic_violations().into_iter().next() {
            return Err(Error::Invalid(v.to_string()));
        }
        Ok(m)
    }

    /// Builds a matrix without checking the shift invariants. Cells are still
    /// sorted; use [`validate`] to list what is wrong with the result.
    pub fn from_raw(lifting: usize, rows: Vec<Vec<Vec<u32>>>) -> Result<Self> {
        if lifting < 2 {
            return Err(Error::LiftingDegree(lifting));
        }
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        if nrows == 0 || ncols == 0 {
            return Err(Error::Invalid("exponent matrix must be non-empty".into()));
        }
        if rows.iter().any(|r| r.len() != ncols) {
            return Err(Error::Invalid("ragged exponent matrix".into()));
        }
        let cells = rows
            .into_iter()
            .flatten()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        Ok(Self {
            rows: nrows,
            cols: ncols,
            lifting,
            cells,
        })
    }

    /// Single-edge constructor: `None` is an empty cell.
    pub fn from_single_edge(lifting: usize, rows: &[Vec<Option<u32>>]) -> Result<Self> {
        Self::new(
            lifting,
            rows.iter()
                .map(|r| r.iter().map(|c| c.map_or_else(Vec::new, |s| vec![s])).collect())
                .collect(),
        )
    }

    /// Fully populated single-edge constructor.
    pub fn from_shifts(lifting: usize, rows: &[Vec<u32>]) -> Result<Self> {
        Self::new(
            lifting,
            rows.iter()
                .map(|r| r.iter().map(|&s| vec![s]).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn lifting(&self) -> usize {
        self.lifting
    }

    pub fn cell(&self, i: usize, j: usize) -> &[u32] {
        &self.cells[i * self.cols + j]
    }

    pub fn is_empty_cell(&self, i: usize, j: usize) -> bool {
        self.cell(i, j).is_empty()
    }

    /// The base matrix implied by the cell vector lengths.
    pub fn base(&self) -> BaseMatrix {
        BaseMatrix {
            rows: self.rows,
            cols: self.cols,
            weights: self.cells.iter().map(|c| c.len() as u32).collect(),
        }
    }

    pub fn is_single_edge(&self) -> bool {
        self.cells.iter().all(|c| c.len() <= 1)
    }

    pub fn column_weight(&self, j: usize) -> usize {
        (0..self.rows).map(|i| self.cell(i, j).len()).sum()
    }

    pub fn row_weight(&self, i: usize) -> usize {
        (0..self.cols).map(|j| self.cell(i, j).len()).sum()
    }

    /// Column weights when all columns agree, i.e. the code is variable-regular.
    pub fn regular_column_weight(&self) -> Option<usize> {
        let w = self.column_weight(0);
        (1..self.cols).all(|j| self.column_weight(j) == w).then_some(w)
    }

    pub fn min_column_weight(&self) -> usize {
        (0..self.cols).map(|j| self.column_weight(j)).min().unwrap_or(0)
    }

    /// Number of protograph edges (sum of all weights).
    pub fn edge_count(&self) -> usize {
        self.cells.iter().map(Vec::len).sum()
    }

    /// Restriction to the given rows and columns, in the given order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> ExponentMatrix {
        ExponentMatrix {
            rows: rows.len(),
            cols: cols.len(),
            lifting: self.lifting,
            cells: rows
                .iter()
                .flat_map(|&i| cols.iter().map(move |&j| self.cell(i, j).to_vec()))
                .collect(),
        }
    }

    /// Row-major copy of all cells.
    pub fn to_rows(&self) -> Vec<Vec<Vec<u32>>> {
        (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.cell(i, j).to_vec()).collect())
            .collect()
    }

    fn intrinsic_violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for i in 0..self.rows {
            for j in 0..self.cols {
                let cell = self.cell(i, j);
                for &s in cell {
                    if s as usize >= self.lifting {
                        out.push(Violation::ShiftOutOfRange {
                            row: i,
                            col: j,
                            shift: s,
                            lifting: self.lifting,
                        });
                    }
                }
                if let Some(w) = cell.windows(2).find(|w| w[0] == w[1]) {
                    out.push(Violation::DuplicateShift {
                        row: i,
                        col: j,
                        shift: w[0],
                    });
                }
            }
        }
        out
    }
}

impl fmt::Display for ExponentMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::text::serialize_text(self))
    }
}

/// One broken invariant of an exponent matrix, located by cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    DuplicateShift {
        row: usize,
        col: usize,
        shift: u32,
    },
    ShiftOutOfRange {
        row: usize,
        col: usize,
        shift: u32,
        lifting: usize,
    },
    WeightMismatch {
        row: usize,
        col: usize,
        expected: u32,
        found: usize,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateShift { row, col, shift } => {
                write!(f, "duplicate shift in cell ({row},{col}): {shift}")
            }
            Violation::ShiftOutOfRange {
                row,
                col,
                shift,
                lifting,
            } => write!(
                f,
                "shift {shift} out of range [0,{lifting}) in cell ({row},{col})"
            ),
            Violation::WeightMismatch {
                row,
                col,
                expected,
                found,
            } => write!(
                f,
                "cell ({row},{col}) has {found} shifts but base weight {expected}"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks `b` against its own invariants and against the base matrix `w`.
///
/// A size mismatch is a structural error, reported as `Err`; everything else
/// ends up in the returned report.
pub fn validate(b: &ExponentMatrix, w: &BaseMatrix) -> Result<ValidationReport> {
    if b.rows != w.rows || b.cols != w.cols {
        return Err(Error::DimensionMismatch {
            exp_rows: b.rows,
            exp_cols: b.cols,
            base_rows: w.rows,
            base_cols: w.cols,
        });
    }
    let mut violations = b.intrinsic_violations();
    for i in 0..b.rows {
        for j in 0..b.cols {
            let found = b.cell(i, j).len();
            let expected = w.weight(i, j);
            if found != expected as usize {
                violations.push(Violation::WeightMismatch {
                    row: i,
                    col: j,
                    expected,
                    found,
                });
            }
        }
    }
    Ok(ValidationReport { violations })
}
