//! The forward map `T ↦ (P, Q)` by iterated successors, and the axioms
//! (R1)-(R5) for recording tableaux.

use std::fmt;

use crate::error::{Error, Result};
use crate::reduction::successor;
use crate::shapes::{Partition, SkewShape};
use crate::tableau::SkewTableau;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LrAiiTrace {
    pub input: SkewTableau,
    pub p_tableau: SkewTableau,
    pub q_tableau: SkewTableau,
    /// `λ = λ^0 ⊋ λ^1 ⊋ … ⊋ λ^N = μ`.
    pub shape_chain: Vec<Partition>,
    pub steps: usize,
}

/// Runs successors on `t` until they stop changing it, recording label
/// `j` on the cells of `λ^{j-1}/λ^j`.
pub fn lr_aii(t: &SkewTableau, n: usize) -> Result<LrAiiTrace> {
    t.require_straight()?;
    t.check_ssyt()?;
    t.check_alphabet(2 * n as u32)?;

    let mut chain = vec![t.outer().clone()];
    let mut cur = t.clone();
    loop {
        let next = successor(&cur)?;
        if next == cur {
            break;
        }
        chain.push(next.outer().clone());
        cur = next;
    }
    let shape = SkewShape::new(t.outer().clone(), cur.outer().clone())?;
    let q = SkewTableau::from_cells(shape, |cell| {
        (1..chain.len())
            .find(|&j| !chain[j].contains_cell(cell))
            .expect("cell outside the final shape") as u32
    });
    Ok(LrAiiTrace {
        input: t.clone(),
        steps: chain.len() - 1,
        p_tableau: cur,
        q_tableau: q,
        shape_chain: chain,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RecAxiom {
    R1,
    R2,
    R3,
    R4,
    R5,
    /// `ℓ(μ) > n` or `ℓ(λ) > 2n`.
    Shape,
}

impl RecAxiom {
    pub fn as_str(self) -> &'static str {
        match self {
            RecAxiom::R1 => "R1",
            RecAxiom::R2 => "R2",
            RecAxiom::R3 => "R3",
            RecAxiom::R4 => "R4",
            RecAxiom::R5 => "R5",
            RecAxiom::Shape => "shape bound ℓ(μ) ≤ n, ℓ(λ) ≤ 2n",
        }
    }
}

impl fmt::Display for RecAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecValidation {
    pub valid: bool,
    pub violated: Option<RecAxiom>,
    /// `μ^(0) = λ ⊇ μ^(1) ⊇ …`, one entry per label up to the largest one.
    /// Empty when the rows or columns are out of order.
    pub mu_chain: Vec<Partition>,
}

/// `μ^(k) = μ ∪ {Q ≥ k+1}` for `k = 0..=max`, if each is a partition.
fn mu_chain(q: &SkewTableau) -> Option<Vec<Partition>> {
    let inner = q.inner();
    (0..=q.max_entry())
        .map(|k| {
            let parts = (1..=q.outer().len())
                .map(|i| inner.row(i) + q.rows()[i - 1].iter().filter(|&&x| x > k).count())
                .collect();
            Partition::new(parts).ok()
        })
        .collect()
}

/// `Q_{≤r}[k]`: occurrences of `k` in rows `1..=r`.
pub fn rec_prefix_count(q: &SkewTableau, r: usize, k: u32) -> usize {
    q.rows()
        .iter()
        .take(r)
        .map(|row| row.iter().filter(|&&x| x == k).count())
        .sum()
}

pub fn validate_rec(q: &SkewTableau, n: usize) -> RecValidation {
    let fail = |axiom, chain: Vec<Partition>| RecValidation {
        valid: false,
        violated: Some(axiom),
        mu_chain: chain,
    };
    if q.inner().len() > n || q.outer().len() > 2 * n {
        return fail(RecAxiom::Shape, Vec::new());
    }
    if q.rows().iter().any(|r| r.windows(2).any(|w| w[0] <= w[1])) {
        return fail(RecAxiom::R1, Vec::new());
    }
    let col_ok = q.entries().all(|((i, j), x)| match q.get((i + 1, j)) {
        Some(below) => below <= x,
        None => true,
    });
    if !col_ok {
        return fail(RecAxiom::R2, Vec::new());
    }
    let chain = mu_chain(q).expect("rows and columns in order give partitions");
    let max = q.max_entry();
    let w = q.weight(max as usize);
    if w.counts.iter().any(|c| c % 2 == 1) {
        return fail(RecAxiom::R3, chain);
    }
    for k in 1..=max as usize {
        if w.get(k) + 2 * n < 2 * chain[k - 1].len() {
            return fail(RecAxiom::R4, chain);
        }
    }
    for k in 1..max {
        for r in 1..=q.outer().len() {
            if rec_prefix_count(q, r, k + 1) > rec_prefix_count(q, r, k) {
                return fail(RecAxiom::R5, chain);
            }
        }
    }
    RecValidation {
        valid: true,
        violated: None,
        mu_chain: chain,
    }
}

/// `(Q[1], Q[2], …)` of a recording tableau.
pub fn rec_weight(q: &SkewTableau) -> Result<Partition> {
    // any n with ℓ(λ) ≤ n makes the shape and (R4) checks vacuous
    let n = q.outer().len().max(1);
    let v = validate_rec(q, n);
    if let Some(axiom) = v.violated {
        return Err(Error::NotRecording(axiom.as_str()));
    }
    let w = q.weight(q.max_entry() as usize);
    Ok(w.to_partition().expect("(R5) makes the weight a partition"))
}
