//! Partitions, skew shapes and vertical strips.
//!
//! Cells use 1-based `(row, column)` matrix coordinates throughout the crate.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cell of a Young diagram, `(row, column)`, both 1-based.
pub type Cell = (usize, usize);

/// An integer partition stored without trailing zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition, dropping trailing zeros. Fails if `parts` is not
    /// weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The column partition `(1^l)`.
    pub fn column(l: usize) -> Self {
        Partition { parts: vec![1; l] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Row length of row `i` (1-based); zero past the last part.
    pub fn row(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Length of column `j` (1-based).
    pub fn col(&self, j: usize) -> usize {
        if j == 0 {
            return 0;
        }
        self.parts.iter().take_while(|&&p| p >= j).count()
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn first_part(&self) -> usize {
        self.row(1)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.first_part();
        Partition {
            parts: (1..=width).map(|j| self.col(j)).collect(),
        }
    }

    /// `γ_{2i-1} = γ_{2i}` for all `i`.
    pub fn is_even(&self) -> bool {
        self.parts.chunks(2).all(|c| c.len() == 2 && c[0] == c[1])
    }

    /// `self ⊆ other` cellwise.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        contains(self, other)
    }

    /// Cells of the diagram in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, &p)| (1..=p).map(move |j| (i + 1, j)))
    }

    pub fn contains_cell(&self, (i, j): Cell) -> bool {
        j >= 1 && j <= self.row(i)
    }

    /// The partition with the first column removed.
    pub fn drop_first_column(&self) -> Partition {
        Partition {
            parts: self
                .parts
                .iter()
                .filter(|&&p| p > 1)
                .map(|p| p - 1)
                .collect(),
        }
    }

    /// All partitions of `size` with at most `max_len` parts, in reverse
    /// lexicographic order.
    pub fn all_of_size(size: usize, max_len: usize) -> Vec<Partition> {
        fn go(
            rest: usize,
            max_part: usize,
            slots: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if slots == 0 {
                return;
            }
            for p in (1..=max_part.min(rest)).rev() {
                cur.push(p);
                go(rest - p, p, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with at most `max_size` cells and at most `max_len`
    /// parts, ordered by size and then reverse lexicographically.
    pub fn all_up_to(max_size: usize, max_len: usize) -> Vec<Partition> {
        (0..=max_size)
            .flat_map(|s| Partition::all_of_size(s, max_len))
            .collect()
    }

    /// All partitions `ν` with `ν ⊆ self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn go(
            outer: &Partition,
            i: usize,
            bound: usize,
            cur: &mut Vec<usize>,
            out: &mut Vec<Partition>,
        ) {
            if i > outer.len() {
                out.push(Partition::new(cur.clone()).expect("decreasing by construction"));
                return;
            }
            for p in (0..=outer.row(i).min(bound)).rev() {
                cur.push(p);
                go(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        go(self, 1, usize::MAX, &mut cur, &mut out);
        out
    }

    /// All `ν ⊆ self` such that `self/ν` is a vertical strip.
    pub fn vertical_strip_removals(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        let n = self.len();
        // each row loses at most one cell; the result must stay a partition
        for mask in 0u64..(1u64 << n) {
            let parts: Vec<usize> = (0..n)
                .map(|i| self.parts[i] - ((mask >> i) & 1) as usize)
                .collect();
            if let Ok(p) = Partition::new(parts) {
                out.push(p);
            }
        }
        out.sort_by(|a, b| b.size().cmp(&a.size()).then_with(|| b.cmp(a)));
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// `inner_i ≤ outer_i` for every row.
pub fn contains(inner: &Partition, outer: &Partition) -> bool {
    inner.len() <= outer.len() && (1..=inner.len()).all(|i| inner.row(i) <= outer.row(i))
}

/// `outer/inner` is a skew shape with at most one cell in each row.
pub fn is_vertical_strip(inner: &Partition, outer: &Partition) -> bool {
    contains(inner, outer) && (1..=outer.len()).all(|i| outer.row(i) - inner.row(i) <= 1)
}

/// A skew shape `outer/inner`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Result<Self> {
        if !contains(&inner, &outer) {
            return Err(Error::NotContained { inner, outer });
        }
        Ok(SkewShape { outer, inner })
    }

    pub fn straight(outer: Partition) -> Self {
        SkewShape {
            outer,
            inner: Partition::empty(),
        }
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn is_straight(&self) -> bool {
        self.inner.is_empty()
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Number of skew cells in row `i`.
    pub fn row_len(&self, i: usize) -> usize {
        self.outer.row(i) - self.inner.row(i)
    }

    /// Skew cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        (1..=self.outer.len())
            .flat_map(move |i| (self.inner.row(i) + 1..=self.outer.row(i)).map(move |j| (i, j)))
    }

    pub fn contains_cell(&self, cell: Cell) -> bool {
        self.outer.contains_cell(cell) && !self.inner.contains_cell(cell)
    }

    pub fn is_vertical_strip(&self) -> bool {
        is_vertical_strip(&self.inner, &self.outer)
    }
}

impl fmt::Display for SkewShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.is_empty() {
            write!(f, "{}", self.outer)
        } else {
            write!(f, "{}/{}", self.outer, self.inner)
        }
    }
}
