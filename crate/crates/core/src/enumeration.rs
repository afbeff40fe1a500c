//! Exhaustive generators for the tableau families and the harness that
//! checks the forward map, the expansion map and the relabeling bijection
//! against each other.

use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::expansion::expand;
use crate::lr_map::{lr_aii, validate_rec};
use crate::reduction::is_symplectic;
use crate::shapes::{contains, Cell, Partition, SkewShape};
use crate::sundaram::{lozenge, lozenge_inv, validate_lrs};
use crate::tableau::SkewTableau;

/// Default cap on `|λ|` for sweeps.
pub const DEFAULT_BUDGET: usize = 6;

/// Lexicographic stream (row-major entries) of the semistandard fillings
/// of a skew shape over `[1, m]`.
pub struct SsytIter {
    shape: SkewShape,
    cells: Vec<Cell>,
    /// index of the left and upper neighbours of each cell, if skew cells
    left: Vec<Option<usize>>,
    above: Vec<Option<usize>>,
    values: Vec<u32>,
    m: u32,
    started: bool,
    done: bool,
}

impl SsytIter {
    fn lower_bound(&self, k: usize) -> u32 {
        let from_left = self.left[k].map_or(1, |p| self.values[p]);
        let from_above = self.above[k].map_or(1, |p| self.values[p] + 1);
        from_left.max(from_above)
    }

    /// Minimal refill of positions `from..`; false if some cell has no room.
    fn refill(&mut self, from: usize) -> bool {
        for k in from..self.cells.len() {
            let lb = self.lower_bound(k);
            if lb > self.m {
                return false;
            }
            self.values[k] = lb;
        }
        true
    }

    fn current(&self) -> SkewTableau {
        let mut it = self.values.iter();
        SkewTableau::from_cells(self.shape.clone(), |_| {
            *it.next().expect("one value per cell")
        })
    }
}

impl Iterator for SsytIter {
    type Item = SkewTableau;

    fn next(&mut self) -> Option<SkewTableau> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.refill(0) {
                return Some(self.current());
            }
            self.done = true;
            return None;
        }
        // lower bounds only grow with earlier values, so a failed refill
        // after raising position p rules out every larger value at p too
        for p in (0..self.cells.len()).rev() {
            if self.values[p] < self.m {
                self.values[p] += 1;
                if self.refill(p + 1) {
                    return Some(self.current());
                }
            }
        }
        self.done = true;
        None
    }
}

pub fn enum_ssyt(shape: &SkewShape, m: u32) -> SsytIter {
    let cells: Vec<Cell> = shape.cells().collect();
    let index = |c: Cell| cells.iter().position(|&d| d == c);
    let left = cells
        .iter()
        .map(|&(i, j)| index((i, j.wrapping_sub(1))))
        .collect();
    let above = cells
        .iter()
        .map(|&(i, j)| index((i.wrapping_sub(1), j)))
        .collect();
    let values = vec![0; cells.len()];
    SsytIter {
        shape: shape.clone(),
        cells,
        left,
        above,
        values,
        m,
        started: false,
        done: false,
    }
}

/// Symplectic tableaux of straight shape over `[2n]`.
pub fn enum_spt(shape: &Partition, n: usize) -> impl Iterator<Item = SkewTableau> {
    enum_ssyt(&SkewShape::straight(shape.clone()), 2 * n as u32).filter(is_symplectic)
}

/// Littlewood-Richardson-Sundaram tableaux of a skew shape.
pub fn enum_lrs(shape: &SkewShape, n: usize) -> impl Iterator<Item = SkewTableau> {
    enum_ssyt(shape, 2 * n as u32).filter(move |t| validate_lrs(t, n).valid)
}

/// Recording tableaux of shape `λ/μ`, built from chains of even vertical
/// strips `λ = μ^(0) ⊋ μ^(1) ⊋ … ⊋ μ` rather than by filtering fillings.
pub fn enum_rec(shape: &SkewShape, n: usize) -> std::vec::IntoIter<SkewTableau> {
    let mut out = Vec::new();
    let outer = shape.outer();
    let inner = shape.inner();
    if outer.len() <= 2 * n && inner.len() <= n {
        let mut chain = vec![outer.clone()];
        rec_chains(inner, n, &mut chain, &mut out);
    }
    out.into_iter()
}

/// Rows of the strip `outer/inner`, cumulative: `counts[r]` = cells in rows `≤ r`.
fn strip_prefix_counts(outer: &Partition, inner: &Partition) -> Vec<usize> {
    let mut acc = 0;
    let mut counts = vec![0];
    for r in 1..=outer.len() {
        acc += outer.row(r) - inner.row(r);
        counts.push(acc);
    }
    counts
}

fn rec_chains(
    target: &Partition,
    n: usize,
    chain: &mut Vec<Partition>,
    out: &mut Vec<SkewTableau>,
) {
    let cur = chain.last().expect("chain starts at λ").clone();
    if &cur == target {
        out.push(chain_to_tableau(chain));
        return;
    }
    let prev_counts = if chain.len() >= 2 {
        Some(strip_prefix_counts(&chain[chain.len() - 2], &cur))
    } else {
        None
    };
    for next in cur.vertical_strip_removals() {
        let size = cur.size() - next.size();
        if size == 0 || size % 2 == 1 || !contains(target, &next) {
            continue;
        }
        // (R4) for this label
        if size + 2 * n < 2 * cur.len() {
            continue;
        }
        // (R5) against the previous label
        if let Some(prev) = &prev_counts {
            let counts = strip_prefix_counts(&cur, &next);
            let ok = (1..counts.len()).all(|r| counts[r] <= prev[r.min(prev.len() - 1)]);
            if !ok {
                continue;
            }
        }
        chain.push(next);
        rec_chains(target, n, chain, out);
        chain.pop();
    }
}

fn chain_to_tableau(chain: &[Partition]) -> SkewTableau {
    let outer = chain[0].clone();
    let inner = chain.last().expect("nonempty chain").clone();
    let shape = SkewShape::new(outer, inner).expect("chain is decreasing");
    SkewTableau::from_cells(shape, |cell| {
        // label k on μ^(k-1)/μ^(k)
        (1..chain.len())
            .find(|&k| !chain[k].contains_cell(cell))
            .expect("cell lies in some strip") as u32
    })
}

/// Per-`μ` tallies in a [`VerificationReport`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeTally {
    pub mu: Partition,
    pub spt: usize,
    pub lrs: usize,
    pub rec: usize,
}

/// A round trip or count that did not come out as expected.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Certificate {
    /// `expand(lr_aii(T)) ≠ T` or the forward map failed on `T`.
    Forward {
        input: SkewTableau,
        detail: String,
    },
    /// `lr_aii(expand(S, Q)) ≠ (S, Q)` or the expansion failed.
    Backward {
        p: SkewTableau,
        q: SkewTableau,
        detail: String,
    },
    /// A recording tableau produced by the forward map fails (R1)-(R5).
    Containment {
        input: SkewTableau,
        q: SkewTableau,
        detail: String,
    },
    /// The relabeling map and its inverse disagree.
    Lozenge {
        tableau: SkewTableau,
        detail: String,
    },
    Count {
        detail: String,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub n: usize,
    pub lambda: Partition,
    pub lhs_count: usize,
    pub rhs_breakdown: Vec<ShapeTally>,
    pub roundtrip_failures: Vec<Certificate>,
    #[serde(serialize_with = "serialize_secs")]
    pub elapsed: Duration,
}

fn serialize_secs<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl VerificationReport {
    /// `Σ_μ |SpT(μ)|·|LRS(λ/μ)|`.
    pub fn rhs_count(&self) -> usize {
        self.rhs_breakdown.iter().map(|t| t.spt * t.lrs).sum()
    }

    pub fn is_ok(&self) -> bool {
        self.roundtrip_failures.is_empty()
            && self.lhs_count == self.rhs_count()
            && self.rhs_breakdown.iter().all(|t| t.lrs == t.rec)
    }
}

/// Checks, for one `λ` and `n`, that the forward map is a bijection onto
/// `⊔_μ SpT(μ) × Rec(λ/μ)` with the expansion map as inverse, that every
/// produced recording tableau satisfies (R1)-(R5), and that the
/// relabeling map matches `LRS(λ/μ)` with `Rec(λ/μ)` elementwise.
pub fn verify_bijection(lambda: &Partition, n: usize) -> VerificationReport {
    let start = Instant::now();
    let m = 2 * n as u32;
    let mut failures = Vec::new();

    let mut lhs_count = 0;
    for t in enum_ssyt(&SkewShape::straight(lambda.clone()), m) {
        lhs_count += 1;
        let trace = match lr_aii(&t, n) {
            Ok(tr) => tr,
            Err(e) => {
                failures.push(Certificate::Forward {
                    input: t,
                    detail: e.to_string(),
                });
                continue;
            }
        };
        let rec = validate_rec(&trace.q_tableau, n);
        if !rec.valid {
            failures.push(Certificate::Containment {
                input: t.clone(),
                q: trace.q_tableau.clone(),
                detail: format!("{:?}", rec.violated),
            });
        }
        match expand(&trace.p_tableau, &trace.q_tableau, n) {
            Ok(back) if back == t => {}
            Ok(back) => failures.push(Certificate::Forward {
                input: t,
                detail: format!("expansion returned\n{back}"),
            }),
            Err(e) => failures.push(Certificate::Forward {
                input: t,
                detail: e.to_string(),
            }),
        }
    }

    let mut rhs_breakdown = Vec::new();
    for mu in lambda.subpartitions() {
        if mu.len() > n {
            continue;
        }
        let shape = SkewShape::new(lambda.clone(), mu.clone()).expect("μ ⊆ λ");
        let spt: Vec<SkewTableau> = enum_spt(&mu, n).collect();
        let lrs: Vec<SkewTableau> = enum_lrs(&shape, n).collect();
        let recs: Vec<SkewTableau> = enum_rec(&shape, n).collect();

        for t in &lrs {
            match lozenge(t, n) {
                Ok(q) => {
                    if !validate_rec(&q, n).valid {
                        failures.push(Certificate::Lozenge {
                            tableau: t.clone(),
                            detail: "image is not a recording tableau".into(),
                        });
                    } else if lozenge_inv(&q, n).as_ref() != Ok(t) {
                        failures.push(Certificate::Lozenge {
                            tableau: t.clone(),
                            detail: "inverse does not return the input".into(),
                        });
                    }
                }
                Err(e) => failures.push(Certificate::Lozenge {
                    tableau: t.clone(),
                    detail: e.to_string(),
                }),
            }
        }
        for q in &recs {
            match lozenge_inv(q, n) {
                Ok(t) if lozenge(&t, n).as_ref() == Ok(q) => {}
                Ok(_) => failures.push(Certificate::Lozenge {
                    tableau: q.clone(),
                    detail: "relabeling the inverse image does not return the input".into(),
                }),
                Err(e) => failures.push(Certificate::Lozenge {
                    tableau: q.clone(),
                    detail: e.to_string(),
                }),
            }
            for s in &spt {
                match expand(s, q, n) {
                    Ok(t) => match lr_aii(&t, n) {
                        Ok(tr) if &tr.p_tableau == s && &tr.q_tableau == q => {}
                        Ok(tr) => failures.push(Certificate::Backward {
                            p: s.clone(),
                            q: q.clone(),
                            detail: format!(
                                "forward map returned P=\n{}\nQ=\n{}",
                                tr.p_tableau, tr.q_tableau
                            ),
                        }),
                        Err(e) => failures.push(Certificate::Backward {
                            p: s.clone(),
                            q: q.clone(),
                            detail: e.to_string(),
                        }),
                    },
                    Err(e) => failures.push(Certificate::Backward {
                        p: s.clone(),
                        q: q.clone(),
                        detail: e.to_string(),
                    }),
                }
            }
        }
        if lrs.len() != recs.len() {
            failures.push(Certificate::Count {
                detail: format!(
                    "|LRS({lambda}/{mu})| = {} but |Rec| = {}",
                    lrs.len(),
                    recs.len()
                ),
            });
        }
        rhs_breakdown.push(ShapeTally {
            mu,
            spt: spt.len(),
            lrs: lrs.len(),
            rec: recs.len(),
        });
    }
    rhs_breakdown.sort_by(|a, b| a.mu.size().cmp(&b.mu.size()).then_with(|| b.mu.cmp(&a.mu)));

    let mut report = VerificationReport {
        n,
        lambda: lambda.clone(),
        lhs_count,
        rhs_breakdown,
        roundtrip_failures: failures,
        elapsed: Duration::ZERO,
    };
    if report.lhs_count != report.rhs_count() {
        report.roundtrip_failures.push(Certificate::Count {
            detail: format!(
                "|SST_{}({lambda})| = {} but Σ|SpT|·|LRS| = {}",
                2 * n,
                report.lhs_count,
                report.rhs_count()
            ),
        });
    }
    report.elapsed = start.elapsed();
    report
}

/// Runs [`verify_bijection`] for every `λ` with `|λ| ≤ budget` and
/// `ℓ(λ) ≤ 2n`, in parallel, returning reports sorted by `(|λ|, λ)`.
pub fn sweep(n: usize, budget: usize) -> Vec<VerificationReport> {
    let shapes = Partition::all_up_to(budget, 2 * n);
    let mut reports: Vec<VerificationReport> = shapes
        .par_iter()
        .map(|lam| verify_bijection(lam, n))
        .collect();
    reports.sort_by(|a, b| {
        a.lambda
            .size()
            .cmp(&b.lambda.size())
            .then_with(|| b.lambda.cmp(&a.lambda))
    });
    reports
}
