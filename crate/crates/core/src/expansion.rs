//! Inverse of the forward map: rebuild `T` from `(P, Q)` by undoing one
//! successor per recording string, largest label first.
//!
//! Undoing a successor splits into two parts. The tail `T_{≥2}` and the
//! reduced first column `red(T_1)` come from reversing the Pieri product
//! against the known shape. The first column itself is then the unique
//! column of the right length whose reduction is `red(T_1)`; it is built
//! from the reduced column by inserting consecutive runs `(x, x+1)` of
//! removable pairs into the gaps between its letters.

use crate::enumeration::enum_ssyt;
use crate::error::{Error, Result};
use crate::insertion::{pieri_reverse, Column};
use crate::lr_map::validate_rec;
use crate::reduction::{is_symplectic, reduce, successor, symplectic_check};
use crate::shapes::{Partition, SkewShape};
use crate::tableau::SkewTableau;

/// One undone successor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionStep {
    /// The tableau the step starts from.
    pub base: SkewTableau,
    pub target_shape: Partition,
    /// `red(T_1)`, ejected from `base` by reverse Pieri insertion.
    pub ejected_column: Column,
    pub tail_lengths: Vec<usize>,
    pub result: SkewTableau,
}

/// Run lengths `(l_1, …, l_{k+1})` of the removed letters in the unique
/// column of length `l` reducing to `a`: `l_1` letters `1..=l_1` before
/// `a_1`, and `l_{i+1}` letters right after `a_i`.
///
/// Removed letters come in pairs `(x, x+1)` with `x` odd. A gap can hold
/// only as many pairs as fit strictly between its neighbours, and pairs
/// are placed as early as possible. Placing too many pairs before a kept
/// couple `(a_j, a_j + 1)` with `a_j` odd would make that couple removable
/// too, which caps the running total of pairs before `a_j`.
pub fn tail_lengths(a: &Column, l: usize) -> Result<Vec<usize>> {
    if let Some(row) = symplectic_check(&a.to_tableau()).first_fail_row {
        return Err(Error::NotSymplectic(row));
    }
    let letters = a.entries();
    let k = letters.len();
    if l < k || (l - k) % 2 == 1 {
        return Err(Error::NoExpansion(format!(
            "no column of length {l} reduces to {a}"
        )));
    }
    let budget = (l - k) / 2;

    // cap[i]: most pairs allowed before a_{i+1} (0-based i)
    let mut cap = vec![usize::MAX; k + 1];
    for j in 0..k.saturating_sub(1) {
        let x = letters[j] as usize;
        if x % 2 == 1 && letters[j + 1] as usize == x + 1 {
            cap[j] = ((x - 1) / 2).saturating_sub(j + 1);
        }
    }
    for i in (0..k).rev() {
        cap[i] = cap[i].min(cap[i + 1]);
    }

    let mut lengths = Vec::with_capacity(k + 1);
    let mut placed = 0;
    for i in 0..=k {
        let take = if i < k {
            let lo = if i == 0 { 0 } else { letters[i - 1] as usize };
            // first odd letter that may follow a_i
            let start = if lo % 2 == 0 { lo + 1 } else { lo + 2 };
            let hi = letters[i] as usize;
            let room = if hi >= start + 2 {
                (hi - 2 - start) / 2 + 1
            } else {
                0
            };
            room.min(budget - placed).min(cap[i].saturating_sub(placed))
        } else {
            budget - placed
        };
        lengths.push(2 * take);
        placed += take;
    }
    Ok(lengths)
}

/// `(1..=l_1) a_1 (run of l_2) a_2 …`, where the run after `a_i` starts
/// at `a_i + 1` when `a_i` is even and at `a_i + 2` when it is odd.
pub fn build_column(a: &Column, lengths: &[usize], n: usize) -> Result<Column> {
    let letters = a.entries();
    if lengths.len() != letters.len() + 1 {
        return Err(Error::NoExpansion(format!(
            "{} run lengths for a column of length {}",
            lengths.len(),
            letters.len()
        )));
    }
    let mut out: Vec<u32> = (1..=lengths[0] as u32).collect();
    for (&x, &run) in letters.iter().zip(&lengths[1..]) {
        out.push(x);
        let start = if x % 2 == 0 { x + 1 } else { x + 2 };
        out.extend(start..start + run as u32);
    }
    let bound = 2 * n as u32;
    if let Some(&entry) = out.iter().find(|&&x| x > bound) {
        return Err(Error::BoundExceeded { entry, bound });
    }
    Column::new(out)
}

/// Undoes one successor: returns `T` of shape `strip.outer()` with
/// `suc(T) = s`, where `strip.inner()` is the shape of `s`.
pub fn expand_one_string(s: &SkewTableau, strip: &SkewShape, n: usize) -> Result<SkewTableau> {
    expansion_step(s, strip, n).map(|step| step.result)
}

pub fn expansion_step(s: &SkewTableau, strip: &SkewShape, n: usize) -> Result<ExpansionStep> {
    s.require_straight()?;
    if strip.inner() != s.outer() {
        return Err(Error::ShapeMismatch {
            expected: s.outer().to_string(),
            got: strip.inner().to_string(),
        });
    }
    let target = strip.outer().clone();
    if strip.size() == 0 {
        // suc(T) = T only for symplectic T
        if let Some(row) = symplectic_check(s).first_fail_row {
            return Err(Error::NotSymplectic(row));
        }
        return Ok(ExpansionStep {
            base: s.clone(),
            target_shape: target,
            ejected_column: Column::new(s.first_column())?,
            tail_lengths: Vec::new(),
            result: s.clone(),
        });
    }
    if !strip.is_vertical_strip() {
        return Err(Error::NotVerticalStrip {
            inner: strip.inner().clone(),
            outer: target,
        });
    }
    if strip.size() % 2 == 1 {
        return Err(Error::NoExpansion(format!("{strip} has odd size")));
    }

    let l = target.len();
    let (ejected, tail) = pieri_reverse(s, &target.drop_first_column())?;
    if l + ejected.len() > 2 * n {
        return Err(Error::NoExpansion(format!(
            "first column length {l} plus {} ejected letters exceeds {}",
            ejected.len(),
            2 * n
        )));
    }
    let lengths = tail_lengths(&ejected, l)?;
    let first = build_column(&ejected, &lengths, n)?;
    debug_assert_eq!(reduce(&first), ejected);
    let result = tail.prepend_column(first.entries())?;
    if result.outer() != &target || !result.validate_ssyt() || successor(&result)? != *s {
        return Err(Error::NoExpansion(format!(
            "rebuilt first column {first} does not give a preimage of shape {target}"
        )));
    }
    Ok(ExpansionStep {
        base: s.clone(),
        target_shape: target,
        ejected_column: ejected,
        tail_lengths: lengths,
        result,
    })
}

/// Inverse of [`crate::lr_map::lr_aii`]: unwinds the strings of `q` from
/// the largest label down.
pub fn expand(s: &SkewTableau, q: &SkewTableau, n: usize) -> Result<SkewTableau> {
    let v = validate_rec(q, n);
    if let Some(axiom) = v.violated {
        return Err(Error::NotRecording(axiom.as_str()));
    }
    s.require_straight()?;
    if s.outer() != q.inner() {
        return Err(Error::ShapeMismatch {
            expected: q.inner().to_string(),
            got: s.outer().to_string(),
        });
    }
    if let Some(row) = symplectic_check(s).first_fail_row {
        return Err(Error::NotSymplectic(row));
    }
    let chain = v.mu_chain;
    let mut cur = s.clone();
    for k in (1..chain.len()).rev() {
        let strip = SkewShape::new(chain[k - 1].clone(), chain[k].clone())?;
        cur = expand_one_string(&cur, &strip, n).map_err(|e| Error::Step {
            step: k,
            source: Box::new(e),
        })?;
    }
    Ok(cur)
}

/// The preimage of `s` under the successor map among all tableaux of
/// shape `source_shape` over `[2n]`, by exhaustive search.
pub fn brute_inverse_successor(
    s: &SkewTableau,
    source_shape: &Partition,
    n: usize,
) -> Option<SkewTableau> {
    if !s.is_straight() || !s.outer().is_contained_in(source_shape) {
        return None;
    }
    if s.outer() == source_shape {
        return is_symplectic(s).then(|| s.clone());
    }
    enum_ssyt(&SkewShape::straight(source_shape.clone()), 2 * n as u32)
        .find(|t| successor(t).as_ref() == Ok(s))
}
