//! Skew fillings, semistandardness, weights and reading words.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{Cell, Partition, SkewShape};

/// A filling of a skew shape `outer/inner` by positive integers.
///
/// `rows[i]` holds the entries of the skew cells of row `i + 1`, left to
/// right. Cells of the inner shape carry no entry.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewTableau {
    shape: SkewShape,
    rows: Vec<Vec<u32>>,
}

/// Letter multiplicities `(T[1], …, T[m])`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub counts: Vec<usize>,
}

impl WeightVector {
    /// Multiplicity of letter `k` (1-based).
    pub fn get(&self, k: usize) -> usize {
        if k == 0 {
            return 0;
        }
        self.counts.get(k - 1).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }

    pub fn to_partition(&self) -> Option<Partition> {
        Partition::new(self.counts.clone()).ok()
    }
}

impl SkewTableau {
    pub fn new(shape: SkewShape, rows: Vec<Vec<u32>>) -> Result<Self> {
        let mut rows = rows;
        let height = shape.outer().len();
        // trailing rows that are fully inside the inner shape may be omitted
        while rows.len() < height {
            rows.push(Vec::new());
        }
        if rows.len() > height {
            if rows[height..].iter().any(|r| !r.is_empty()) {
                let row = height + 1;
                return Err(Error::RowLength {
                    row,
                    expected: 0,
                    got: rows[height].len(),
                });
            }
            rows.truncate(height);
        }
        for (i, r) in rows.iter().enumerate() {
            let expected = shape.row_len(i + 1);
            if r.len() != expected {
                return Err(Error::RowLength {
                    row: i + 1,
                    expected,
                    got: r.len(),
                });
            }
            if let Some(pos) = r.iter().position(|&x| x == 0) {
                return Err(Error::EntryOutOfRange {
                    cell: (i + 1, shape.inner().row(i + 1) + pos + 1),
                    entry: 0,
                    bound: u32::MAX,
                });
            }
        }
        Ok(SkewTableau { shape, rows })
    }

    /// Straight-shape tableau from its rows.
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let outer = Partition::new(rows.iter().map(Vec::len).collect())?;
        SkewTableau::new(SkewShape::straight(outer), rows)
    }

    /// Straight-shape tableau from its columns, each listed top to bottom.
    pub fn from_columns(cols: &[Vec<u32>]) -> Result<Self> {
        let height = cols.first().map_or(0, Vec::len);
        let mut rows = vec![Vec::new(); height];
        for c in cols {
            if c.len() > height {
                return Err(Error::NotPartition(cols.iter().map(Vec::len).collect()));
            }
            for (i, &x) in c.iter().enumerate() {
                rows[i].push(x);
            }
        }
        SkewTableau::from_rows(rows)
    }

    /// The empty straight tableau.
    pub fn empty() -> Self {
        SkewTableau::default()
    }

    /// The unique (empty) filling of `shape/shape`.
    pub fn empty_skew(shape: Partition) -> Self {
        let height = shape.len();
        SkewTableau {
            shape: SkewShape::new(shape.clone(), shape).expect("reflexive containment"),
            rows: vec![Vec::new(); height],
        }
    }

    /// A tableau from a map of cells to entries, for shapes known to be
    /// valid. Cells must cover exactly the skew cells of `shape`.
    pub fn from_cells(shape: SkewShape, mut entry: impl FnMut(Cell) -> u32) -> Self {
        let rows = (1..=shape.outer().len())
            .map(|i| {
                (shape.inner().row(i) + 1..=shape.outer().row(i))
                    .map(|j| entry((i, j)))
                    .collect()
            })
            .collect();
        SkewTableau { shape, rows }
    }

    pub fn shape(&self) -> &SkewShape {
        &self.shape
    }

    pub fn outer(&self) -> &Partition {
        self.shape.outer()
    }

    pub fn inner(&self) -> &Partition {
        self.shape.inner()
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn is_straight(&self) -> bool {
        self.shape.is_straight()
    }

    /// Number of filled cells.
    pub fn size(&self) -> usize {
        self.shape.size()
    }

    pub fn is_empty(&self) -> bool {
        self.size() == 0
    }

    pub fn get(&self, (i, j): Cell) -> Option<u32> {
        let inner = self.inner().row(i);
        if i == 0 || j <= inner {
            return None;
        }
        self.rows.get(i - 1)?.get(j - inner - 1).copied()
    }

    /// `(cell, entry)` pairs in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = (Cell, u32)> + '_ {
        self.rows.iter().enumerate().flat_map(move |(i, r)| {
            let offset = self.inner().row(i + 1);
            r.iter()
                .enumerate()
                .map(move |(k, &x)| ((i + 1, offset + k + 1), x))
        })
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Entries of the skew cells of column `j`, top to bottom.
    pub fn column(&self, j: usize) -> Vec<u32> {
        (1..=self.outer().col(j))
            .filter_map(|i| self.get((i, j)))
            .collect()
    }

    /// All columns of a straight tableau, left to right.
    pub fn columns(&self) -> Vec<Vec<u32>> {
        (1..=self.outer().first_part())
            .map(|j| self.column(j))
            .collect()
    }

    /// The same filling with every entry passed through `f`.
    pub fn map_entries(&self, mut f: impl FnMut(Cell, u32) -> u32) -> SkewTableau {
        let mut out = self.clone();
        for (i, r) in out.rows.iter_mut().enumerate() {
            let offset = self.inner().row(i + 1);
            for (k, x) in r.iter_mut().enumerate() {
                *x = f((i + 1, offset + k + 1), *x);
            }
        }
        out
    }

    /// Every entry lies in `[1, bound]`.
    pub fn check_alphabet(&self, bound: u32) -> Result<()> {
        match self.entries().find(|&(_, x)| x == 0 || x > bound) {
            Some((cell, entry)) => Err(Error::EntryOutOfRange { cell, entry, bound }),
            None => Ok(()),
        }
    }

    /// Rows weakly increase and columns strictly increase over skew cells.
    pub fn check_ssyt(&self) -> Result<()> {
        for ((i, j), x) in self.entries() {
            if let Some(right) = self.get((i, j + 1)) {
                if right < x {
                    return Err(Error::NotSemistandard((i, j)));
                }
            }
            if let Some(below) = self.get((i + 1, j)) {
                if below <= x {
                    return Err(Error::NotSemistandard((i, j)));
                }
            }
        }
        Ok(())
    }

    pub fn validate_ssyt(&self) -> bool {
        self.check_ssyt().is_ok()
    }

    /// Letter counts over `[1, m]`; letters above `m` are ignored.
    pub fn weight(&self, m: usize) -> WeightVector {
        let mut counts = vec![0; m];
        for (_, x) in self.entries() {
            if let Some(c) = counts.get_mut(x as usize - 1) {
                *c += 1;
            }
        }
        WeightVector { counts }
    }

    /// Rows top to bottom, each read right to left.
    pub fn reverse_row_word(&self) -> Vec<u32> {
        self.rows
            .iter()
            .flat_map(|r| r.iter().rev().copied())
            .collect()
    }

    /// Columns from the rightmost to the leftmost, each read top to bottom.
    pub fn column_reading_word(&self) -> Vec<u32> {
        (1..=self.outer().first_part())
            .rev()
            .flat_map(|j| self.column(j))
            .collect()
    }

    /// First column of a straight tableau.
    pub fn first_column(&self) -> Vec<u32> {
        self.column(1)
    }

    /// A straight tableau with its first column removed.
    pub fn drop_first_column(&self) -> SkewTableau {
        let rows: Vec<Vec<u32>> = self
            .rows
            .iter()
            .filter(|r| r.len() > 1)
            .map(|r| r[1..].to_vec())
            .collect();
        SkewTableau::from_rows(rows).expect("removing a column keeps a partition shape")
    }

    /// Glues `col` in front of a straight tableau.
    pub fn prepend_column(&self, col: &[u32]) -> Result<SkewTableau> {
        if !self.is_straight() {
            return Err(Error::NotStraight(self.inner().clone()));
        }
        let height = col.len().max(self.rows.len());
        let rows = (0..height)
            .map(|i| {
                let mut r: Vec<u32> = col.get(i).copied().into_iter().collect();
                if let Some(rest) = self.rows.get(i) {
                    if r.is_empty() && !rest.is_empty() {
                        return Err(Error::NotPartition(vec![0, rest.len()]));
                    }
                    r.extend_from_slice(rest);
                }
                Ok(r)
            })
            .collect::<Result<Vec<_>>>()?;
        SkewTableau::from_rows(rows)
    }

    pub(crate) fn require_straight(&self) -> Result<()> {
        if self.is_straight() {
            Ok(())
        } else {
            Err(Error::NotStraight(self.inner().clone()))
        }
    }
}

/// Every prefix has partition weight.
pub fn is_yamanouchi(word: &[u32]) -> bool {
    let mut counts: Vec<usize> = Vec::new();
    for &x in word {
        if x == 0 {
            return false;
        }
        let k = x as usize;
        if counts.len() < k {
            counts.resize(k, 0);
        }
        counts[k - 1] += 1;
        if k > 1 && counts[k - 1] > counts[k - 2] {
            return false;
        }
    }
    true
}

impl fmt::Display for SkewTableau {
    /// Inner cells print as `.`; entries are right-padded to a common width.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self.max_entry().max(1).to_string().len();
        if self.outer().is_empty() {
            return write!(f, "∅");
        }
        for i in 1..=self.outer().len() {
            if i > 1 {
                writeln!(f)?;
            }
            let cells: Vec<String> = (1..=self.outer().row(i))
                .map(|j| match self.get((i, j)) {
                    Some(x) => format!("{x:<width$}"),
                    None => format!("{:<width$}", "."),
                })
                .collect();
            write!(f, "{}", cells.join(" ").trim_end())?;
        }
        Ok(())
    }
}
