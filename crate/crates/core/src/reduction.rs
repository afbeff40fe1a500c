//! King's symplectic condition, the removal subword of a column, and the
//! successor map built from it.
//!
//! None of these operations depend on `n` beyond the alphabet `[2n]` the
//! inputs are drawn from, so `n` does not appear in their signatures.

use crate::error::Result;
use crate::insertion::{pieri_insert, Column};
use crate::tableau::SkewTableau;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymplecticVerdict {
    pub is_symplectic: bool,
    /// First row `i` with `G(i,1) < 2i - 1`.
    pub first_fail_row: Option<usize>,
}

/// Checks `G(k,1) ≥ 2k - 1` down the first column.
pub fn symplectic_check(t: &SkewTableau) -> SymplecticVerdict {
    column_verdict(&t.first_column())
}

pub fn is_symplectic(t: &SkewTableau) -> bool {
    t.is_straight() && symplectic_check(t).is_symplectic
}

fn column_verdict(first: &[u32]) -> SymplecticVerdict {
    let first_fail_row = first
        .iter()
        .enumerate()
        .find(|&(k, &g)| (g as usize) < 2 * (k + 1) - 1)
        .map(|(k, _)| k + 1);
    SymplecticVerdict {
        is_symplectic: first_fail_row.is_none(),
        first_fail_row,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RemovalResult {
    /// `rem(a)`, as a subword of `a`.
    pub removed: Vec<u32>,
    /// 1-based positions in `a` of the removed letters.
    pub removed_positions: Vec<usize>,
    /// `red(a)`.
    pub reduced: Column,
}

/// Computes `rem(a)` and `red(a)`.
///
/// Scanning prefixes, the last two letters `(a_{l-1}, a_l)` of a prefix of
/// length `l` are removed together when `a_l` is even, `a_{l-1} = a_l - 1`
/// and `a_l < 2l - |rem(a_1..a_{l-2})| - 1`; otherwise the prefix inherits
/// the removal set of `a_1..a_{l-1}`.
pub fn removal_subword(a: &Column) -> RemovalResult {
    let letters = a.entries();
    let l = letters.len();
    // size[j] = |rem(a_1..a_j)|, paired[j] = prefix j ends with a removed pair
    let mut size = vec![0usize; l + 1];
    let mut paired = vec![false; l + 1];
    for j in 2..=l {
        let last = letters[j - 1] as usize;
        let prev = letters[j - 2] as usize;
        if last.is_multiple_of(2) && prev + 1 == last && last + size[j - 2] + 1 < 2 * j {
            size[j] = size[j - 2] + 2;
            paired[j] = true;
        } else {
            size[j] = size[j - 1];
        }
    }
    let mut removed_flags = vec![false; l];
    let mut j = l;
    while j >= 2 {
        if paired[j] {
            removed_flags[j - 1] = true;
            removed_flags[j - 2] = true;
            j -= 2;
        } else {
            j -= 1;
        }
    }
    let mut removed = Vec::new();
    let mut removed_positions = Vec::new();
    let mut kept = Vec::new();
    for (k, &x) in letters.iter().enumerate() {
        if removed_flags[k] {
            removed.push(x);
            removed_positions.push(k + 1);
        } else {
            kept.push(x);
        }
    }
    RemovalResult {
        removed,
        removed_positions,
        reduced: Column::new(kept).expect("subword of a column"),
    }
}

/// `red(a)`.
pub fn reduce(a: &Column) -> Column {
    removal_subword(a).reduced
}

/// `suc(S) = red(S_1) ⊙ S_{≥2}`.
pub fn successor(s: &SkewTableau) -> Result<SkewTableau> {
    s.require_straight()?;
    let first = Column::new(s.first_column())?;
    pieri_insert(&reduce(&first), &s.drop_first_column())
}
