//! Littlewood-Richardson-Sundaram tableaux, their strings, the relabeling
//! bijection with recording tableaux, and the rotate-then-transpose
//! symmetry.

use std::fmt;

use crate::error::{Error, Result};
use crate::lr_map::validate_rec;
use crate::shapes::{is_vertical_strip, Cell, Partition, SkewShape};
use crate::tableau::{is_yamanouchi, SkewTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LrsCondition {
    Ssyt,
    Yamanouchi,
    EvenWeight,
    /// Entry `2k+1` in row `i` needs `i ≤ n + k`.
    Sundaram,
}

impl LrsCondition {
    pub fn as_str(self) -> &'static str {
        match self {
            LrsCondition::Ssyt => "SSYT",
            LrsCondition::Yamanouchi => "Yamanouchi",
            LrsCondition::EvenWeight => "EvenWeight",
            LrsCondition::Sundaram => "Sundaram",
        }
    }
}

impl fmt::Display for LrsCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LrsValidation {
    pub valid: bool,
    pub violated: Option<LrsCondition>,
}

pub fn validate_lrs(t: &SkewTableau, n: usize) -> LrsValidation {
    let violated = if !t.validate_ssyt() {
        Some(LrsCondition::Ssyt)
    } else if !is_yamanouchi(&t.column_reading_word()) {
        Some(LrsCondition::Yamanouchi)
    } else if !t
        .weight(t.max_entry() as usize)
        .to_partition()
        .is_some_and(|w| w.is_even())
    {
        Some(LrsCondition::EvenWeight)
    } else if t
        .entries()
        .any(|((i, _), x)| x % 2 == 1 && i > n + (x as usize - 1) / 2)
    {
        Some(LrsCondition::Sundaram)
    } else {
        None
    };
    LrsValidation {
        valid: violated.is_none(),
        violated,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StringDecomposition {
    /// `μ^(0) = λ ⊋ μ^(1) ⊋ … = μ`.
    pub chain: Vec<Partition>,
    /// `J_k = μ^(k-1)/μ^(k)`, cells top to bottom.
    pub strings: Vec<Vec<Cell>>,
}

/// Peels strings off `t`: each round erases, for every value still
/// present, the rightmost cell holding it.
pub fn string_decomposition(t: &SkewTableau) -> Result<StringDecomposition> {
    t.check_ssyt()?;
    let inner = t.inner().clone();
    let mut cur = t.outer().clone();
    let mut chain = vec![cur.clone()];
    let mut strings = Vec::new();
    while cur != inner {
        let mut rightmost: Vec<Option<Cell>> = vec![None; t.max_entry() as usize + 1];
        for (cell, x) in t.entries().filter(|&(c, _)| cur.contains_cell(c)) {
            let slot = &mut rightmost[x as usize];
            if slot.is_none_or(|(_, j)| cell.1 > j) {
                *slot = Some(cell);
            }
        }
        let mut string: Vec<Cell> = rightmost.into_iter().flatten().collect();
        string.sort_unstable();
        let parts = (1..=cur.len())
            .map(|i| cur.row(i) - string.iter().filter(|c| c.0 == i).count())
            .collect();
        let next = Partition::new(parts).map_err(|_| {
            Error::Strings(format!("erasing {string:?} from {cur} leaves no partition"))
        })?;
        if !string.iter().all(|&c| cur.row(c.0) == c.1) || !is_vertical_strip(&next, &cur) {
            return Err(Error::Strings(format!(
                "{string:?} is not a vertical strip of {cur}"
            )));
        }
        chain.push(next.clone());
        strings.push(string);
        cur = next;
    }
    Ok(StringDecomposition { chain, strings })
}

/// Relabels the `k`-th string of an LRS tableau with the constant `k`.
pub fn lozenge(t: &SkewTableau, n: usize) -> Result<SkewTableau> {
    if let Some(c) = validate_lrs(t, n).violated {
        return Err(Error::NotLrs(c.as_str()));
    }
    let dec = string_decomposition(t)?;
    Ok(SkewTableau::from_cells(t.shape().clone(), |cell| {
        dec.strings
            .iter()
            .position(|s| s.contains(&cell))
            .expect("strings cover the shape") as u32
            + 1
    }))
}

/// Numbers the cells of each constant-label string `1, 2, …` top to bottom.
pub fn lozenge_inv(q: &SkewTableau, n: usize) -> Result<SkewTableau> {
    if let Some(axiom) = validate_rec(q, n).violated {
        return Err(Error::NotRecording(axiom.as_str()));
    }
    // rows are visited in order, so a running counter per label suffices
    let mut next = vec![1u32; q.max_entry() as usize + 1];
    let t = q.map_entries(|_, k| {
        let x = next[k as usize];
        next[k as usize] += 1;
        x
    });
    if let Some(c) = validate_lrs(&t, n).violated {
        return Err(Error::NotLrs(c.as_str()));
    }
    Ok(t)
}

/// `Q = ◊(t)` carried through `(i, j) ↦ (cols + 1 - j, rows + 1 - i)`,
/// which lands in a `cols × rows` rectangle.
pub fn blacklozenge(t: &SkewTableau, n: usize, rows: usize, cols: usize) -> Result<SkewTableau> {
    let q = lozenge(t, n)?;
    let outer = q.outer();
    if outer.len() > rows || outer.first_part() > cols {
        return Err(Error::RectangleTooSmall {
            rows,
            cols,
            shape: outer.clone(),
        });
    }
    let outer_t = outer.conjugate();
    let inner_t = q.inner().conjugate();
    let new_outer = Partition::new(
        (1..=cols)
            .map(|i| rows - inner_t.row(cols + 1 - i))
            .collect(),
    )?;
    let new_inner = Partition::new(
        (1..=cols)
            .map(|i| rows - outer_t.row(cols + 1 - i))
            .collect(),
    )?;
    let shape = SkewShape::new(new_outer, new_inner)?;
    Ok(SkewTableau::from_cells(shape, |(i, j)| {
        q.get((rows + 1 - j, cols + 1 - i))
            .expect("image of a skew cell")
    }))
}

/// [`blacklozenge`] in the bounding box `ℓ(λ) × λ_1` of the shape.
pub fn blacklozenge_default(t: &SkewTableau, n: usize) -> Result<SkewTableau> {
    blacklozenge(t, n, t.outer().len(), t.outer().first_part())
}

/// Semistandard with a Yamanouchi reverse row word.
pub fn validate_lr(t: &SkewTableau) -> bool {
    t.validate_ssyt() && is_yamanouchi(&t.reverse_row_word())
}
