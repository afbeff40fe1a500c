//! The JSON exchange format for tableaux.

use anyhow::{bail, Context, Result};
use lrkit::{Partition, SkewShape, SkewTableau};
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Ssyt,
    Symplectic,
    Lrs,
    Rec,
    Lr,
}

/// A skew filling. Field order is fixed: `outer, inner, rows, n, kind`.
/// `rows[i]` lists the entries of the skew cells of row `i + 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TableauDocument {
    pub outer: Vec<usize>,
    #[serde(default)]
    pub inner: Vec<usize>,
    pub rows: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<Kind>,
}

impl TableauDocument {
    pub fn new(t: &SkewTableau, n: Option<usize>, kind: Kind) -> Self {
        TableauDocument {
            outer: t.outer().parts().to_vec(),
            inner: t.inner().parts().to_vec(),
            rows: t.rows().to_vec(),
            n,
            kind: Some(kind),
        }
    }

    pub fn to_tableau(&self) -> Result<SkewTableau> {
        let outer = Partition::new(self.outer.clone()).context("outer shape")?;
        let inner = Partition::new(self.inner.clone()).context("inner shape")?;
        let shape = SkewShape::new(outer, inner)?;
        Ok(SkewTableau::new(shape, self.rows.clone())?)
    }

    /// The tableau, after checking that a recorded `n` agrees with `n`.
    pub fn tableau_for(&self, n: usize) -> Result<SkewTableau> {
        if let Some(doc_n) = self.n {
            if doc_n != n {
                bail!("document was written for n = {doc_n} but --n is {n}");
            }
        }
        self.to_tableau()
    }
}

pub fn parse(text: &str) -> Result<TableauDocument> {
    serde_json::from_str(text).context("malformed tableau document")
}

/// Text grid: `.` for inner cells, entries left-aligned to a common width.
pub fn render(t: &SkewTableau) -> String {
    if t.outer().is_empty() {
        return "(empty)\n".to_string();
    }
    let width = t.max_entry().max(1).to_string().len();
    let mut out = String::new();
    for i in 1..=t.outer().len() {
        let cells: Vec<String> = (1..=t.outer().row(i))
            .map(|j| match t.get((i, j)) {
                Some(x) => format!("{x:<width$}"),
                None => format!("{:<width$}", "."),
            })
            .collect();
        out.push_str(cells.join(" ").trim_end());
        out.push('\n');
    }
    out
}
