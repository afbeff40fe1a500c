//! Schensted column insertion, its reverse, and the Pieri product of a
//! column with a tableau.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{is_vertical_strip, Cell, Partition};
use crate::tableau::SkewTableau;

/// A strictly increasing word, viewed as a one-column tableau.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Column(Vec<u32>);

impl Column {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.first() == Some(&0) || entries.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::NotColumn(entries));
        }
        Ok(Column(entries))
    }

    pub fn empty() -> Self {
        Column(Vec::new())
    }

    /// `(1, 2, …, l)`.
    pub fn initial(l: usize) -> Self {
        Column((1..=l as u32).collect())
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Entry in row `i` (1-based).
    pub fn get(&self, i: usize) -> Option<u32> {
        i.checked_sub(1).and_then(|k| self.0.get(k).copied())
    }

    pub fn to_tableau(&self) -> SkewTableau {
        SkewTableau::from_columns(std::slice::from_ref(&self.0)).expect("a column is a straight shape")
    }
}

impl TryFrom<Vec<u32>> for Column {
    type Error = Error;

    fn try_from(v: Vec<u32>) -> Result<Self> {
        Column::new(v)
    }
}

impl From<Column> for Vec<u32> {
    fn from(c: Column) -> Self {
        c.0
    }
}

impl fmt::Display for Column {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Output of a single column insertion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InsertionResult {
    pub tableau: SkewTableau,
    pub new_cell: Cell,
    /// Cells where the travelling letter came to rest in each column, left
    /// to right, paired with the letter it displaced (the last cell is the
    /// new one and displaces nothing).
    pub route: Vec<(Cell, Option<u32>)>,
}

fn rebuild(mut cols: Vec<Vec<u32>>) -> SkewTableau {
    while cols.last().is_some_and(Vec::is_empty) {
        cols.pop();
    }
    SkewTableau::from_columns(&cols).expect("insertion preserves partition shape")
}

/// `x → t`: column-insert `x` into a straight semistandard tableau.
pub fn column_insert(x: u32, t: &SkewTableau) -> Result<InsertionResult> {
    t.require_straight()?;
    let mut cols = t.columns();
    let mut route = Vec::new();
    let mut letter = x;
    let mut j = 0;
    let new_cell = loop {
        if j == cols.len() {
            cols.push(vec![letter]);
            break (1, j + 1);
        }
        let col = &mut cols[j];
        match col.iter().position(|&y| y >= letter) {
            None => {
                col.push(letter);
                break (col.len(), j + 1);
            }
            Some(pos) => {
                let bumped = std::mem::replace(&mut col[pos], letter);
                route.push(((pos + 1, j + 1), Some(bumped)));
                letter = bumped;
                j += 1;
            }
        }
    };
    route.push((new_cell, None));
    Ok(InsertionResult {
        tableau: rebuild(cols),
        new_cell,
        route,
    })
}

/// Reverse column insertion starting from the corner `cell`. Returns the
/// letter ejected from the first column and the smaller tableau.
pub fn reverse_column_insert(t: &SkewTableau, cell: Cell) -> Result<(u32, SkewTableau)> {
    t.require_straight()?;
    let (i, j) = cell;
    let shape = t.outer();
    if j == 0 || i == 0 || shape.col(j) != i || shape.col(j + 1) >= i {
        return Err(Error::NotColumnBottom(cell));
    }
    let mut cols = t.columns();
    let mut letter = cols[j - 1].pop().expect("cell is inside the shape");
    for col in cols[..j - 1].iter_mut().rev() {
        let pos = col
            .iter()
            .rposition(|&y| y <= letter)
            .ok_or(Error::NotSemistandard(cell))?;
        letter = std::mem::replace(&mut col[pos], letter);
    }
    Ok((letter, rebuild(cols)))
}

/// `s ⊙ t`: insert the letters of `s` in increasing order.
pub fn pieri_insert(s: &Column, t: &SkewTableau) -> Result<SkewTableau> {
    let mut cur = t.clone();
    for &x in s.entries() {
        cur = column_insert(x, &cur)?.tableau;
    }
    Ok(cur)
}

/// Undo a Pieri product: reverse-insert the cells of `sh(u)/strip_inner`
/// from bottom to top. Returns the column and a tableau of shape
/// `strip_inner`.
pub fn pieri_reverse(u: &SkewTableau, strip_inner: &Partition) -> Result<(Column, SkewTableau)> {
    u.require_straight()?;
    let outer = u.outer();
    if !is_vertical_strip(strip_inner, outer) {
        return Err(Error::NotVerticalStrip {
            inner: strip_inner.clone(),
            outer: outer.clone(),
        });
    }
    let mut cur = u.clone();
    let mut ejected = Vec::new();
    for i in (1..=outer.len()).rev() {
        if outer.row(i) > strip_inner.row(i) {
            let (y, rest) = reverse_column_insert(&cur, (i, outer.row(i)))?;
            ejected.push(y);
            cur = rest;
        }
    }
    ejected.reverse();
    Ok((Column::new(ejected)?, cur))
}
