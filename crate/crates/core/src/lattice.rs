//! Lattice points of Σ^f(λ): enumeration, counting, decomposition into
//! fundamental essential signatures, and the count-versus-dimension sweep.

use std::collections::HashSet;
use std::sync::OnceLock;
use std::time::Instant;

use num_bigint::BigUint;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cone::{member, transcribed_generators, RayGenerator};
use crate::error::{Error, Result};
use crate::roots::{weyl_dim, DomWeight, NUM_POSITIVE, RANK};
use crate::signatures::{sort_signatures, Signature};
use crate::tables::CONE_INEQUALITIES;

const NUM_INEQ: usize = CONE_INEQUALITIES.len();

/// Variables are assigned p_12 first, down to p_1.
const ORDER: [usize; NUM_POSITIVE] = [11, 10, 9, 8, 7, 6, 5, 4, 3, 2, 1, 0];

/// For each variable, the inequalities it occurs in with their coefficients.
struct Occurrences {
    by_var: [Vec<(usize, i64)>; NUM_POSITIVE],
}

fn occurrences() -> &'static Occurrences {
    static OCC: OnceLock<Occurrences> = OnceLock::new();
    OCC.get_or_init(|| {
        let by_var: [Vec<(usize, i64)>; NUM_POSITIVE] = std::array::from_fn(|j| {
            CONE_INEQUALITIES
                .iter()
                .enumerate()
                .filter(|(_, q)| q.a[j] > 0)
                .map(|(i, q)| (i, i64::from(q.a[j])))
                .collect()
        });
        assert!(by_var.iter().all(|v| !v.is_empty()), "every exponent must be bounded");
        Occurrences { by_var }
    })
}

fn right_sides(lambda: &DomWeight) -> [i64; NUM_INEQ] {
    std::array::from_fn(|i| {
        CONE_INEQUALITIES[i].b.iter().zip(lambda.k).map(|(b, k)| i64::from(*b) * i64::from(k)).sum()
    })
}

/// Depth-first walk over the points; residuals stay nonnegative because
/// every coefficient is nonnegative, so each bound is exact at its level.
struct Walker<'a> {
    occ: &'a Occurrences,
    residual: [i64; NUM_INEQ],
    p: [u32; NUM_POSITIVE],
}

impl<'a> Walker<'a> {
    fn new(lambda: &DomWeight) -> Self {
        Self { occ: occurrences(), residual: right_sides(lambda), p: [0; NUM_POSITIVE] }
    }

    fn bound(&self, var: usize) -> i64 {
        self.occ.by_var[var].iter().map(|&(i, a)| self.residual[i] / a).min().expect("bounded")
    }

    fn shift(&mut self, var: usize, by: i64) {
        for &(i, a) in &self.occ.by_var[var] {
            self.residual[i] -= a * by;
        }
    }

    fn count(&mut self, level: usize) -> u64 {
        let var = ORDER[level];
        let max = self.bound(var);
        if level == NUM_POSITIVE - 1 {
            return (max + 1) as u64;
        }
        let mut total = 0;
        for v in 0..=max {
            if v > 0 {
                self.shift(var, 1);
            }
            total += self.count(level + 1);
        }
        self.shift(var, -max);
        total
    }

    fn visit(&mut self, level: usize, f: &mut dyn FnMut(&[u32; NUM_POSITIVE])) {
        if level == NUM_POSITIVE {
            f(&self.p);
            return;
        }
        let var = ORDER[level];
        let max = self.bound(var);
        for v in 0..=max {
            if v > 0 {
                self.shift(var, 1);
            }
            self.p[var] = v as u32;
            self.visit(level + 1, f);
        }
        self.shift(var, -max);
        self.p[var] = 0;
    }

    /// The `index`-th point in walk order.
    fn unrank(&mut self, mut index: u64) -> [u32; NUM_POSITIVE] {
        for level in 0..NUM_POSITIVE {
            let var = ORDER[level];
            let max = self.bound(var);
            let mut chosen = None;
            for v in 0..=max {
                self.shift(var, v);
                self.p[var] = v as u32;
                let below = if level == NUM_POSITIVE - 1 { 1 } else { self.count(level + 1) };
                if index < below {
                    chosen = Some(v);
                    break;
                }
                index -= below;
                self.shift(var, -v);
            }
            chosen.expect("index within count");
        }
        self.p
    }
}

/// All points of Σ^f(λ), ascending in the signature order.
pub fn enumerate_points(lambda: &DomWeight) -> Vec<Signature> {
    let mut out = Vec::new();
    Walker::new(lambda).visit(0, &mut |p| out.push(Signature::new(*lambda, *p)));
    sort_signatures(&mut out);
    out
}

/// Calls `f` for each point of Σ^f(λ) in walk order, without collecting.
pub fn for_each_point(lambda: &DomWeight, mut f: impl FnMut(&Signature)) {
    Walker::new(lambda).visit(0, &mut |p| f(&Signature::new(*lambda, *p)));
}

pub fn count_points_u64(lambda: &DomWeight) -> u64 {
    Walker::new(lambda).count(0)
}

/// |Σ^f(λ)|.
pub fn count_points(lambda: &DomWeight) -> BigUint {
    BigUint::from(count_points_u64(lambda))
}

/// A uniformly random point of Σ^f(λ).
pub fn sample_point<R: Rng + ?Sized>(lambda: &DomWeight, rng: &mut R) -> Signature {
    let mut w = Walker::new(lambda);
    let n = w.count(0);
    let p = w.unrank(rng.gen_range(0..n));
    Signature::new(*lambda, p)
}

/// Uniform sampler over the union of Σ^f(λ) for Σ k_i ≤ `max_total`.
#[derive(Clone, Debug)]
pub struct PointSampler {
    weights: Vec<DomWeight>,
    cumulative: Vec<u64>,
}

impl PointSampler {
    pub fn new(max_total: u32) -> Self {
        let weights = DomWeight::up_to_total(max_total);
        let mut acc = 0;
        let cumulative = weights
            .iter()
            .map(|l| {
                acc += count_points_u64(l);
                acc
            })
            .collect();
        Self { weights, cumulative }
    }

    pub fn total(&self) -> u64 {
        self.cumulative.last().copied().unwrap_or(0)
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Signature {
        let r = rng.gen_range(0..self.total());
        let i = self.cumulative.partition_point(|&c| c <= r);
        let before = if i == 0 { 0 } else { self.cumulative[i - 1] };
        let lambda = self.weights[i];
        Signature::new(lambda, Walker::new(&lambda).unrank(r - before))
    }

    /// `n` independent uniform draws, in draw order. One walk per weight
    /// instead of one unrank per draw.
    pub fn sample_many<R: Rng + ?Sized>(&self, n: usize, rng: &mut R) -> Vec<Signature> {
        let mut ranks: Vec<(u64, usize)> = (0..n).map(|i| (rng.gen_range(0..self.total()), i)).collect();
        ranks.sort_unstable();
        let mut out = vec![Signature::zero(DomWeight::ZERO); n];
        let mut next = 0;
        for (w, lambda) in self.weights.iter().enumerate() {
            let end = self.cumulative[w];
            if next == ranks.len() || ranks[next].0 >= end {
                continue;
            }
            let mut index = if w == 0 { 0 } else { self.cumulative[w - 1] };
            Walker::new(lambda).visit(0, &mut |p| {
                while next < ranks.len() && ranks[next].0 == index {
                    out[ranks[next].1] = Signature::new(*lambda, *p);
                    next += 1;
                }
                index += 1;
            });
        }
        out
    }
}

/// Fundamental generators grouped by weight index, in table order.
fn group_by_weight(gens: &[RayGenerator]) -> [Vec<Signature>; RANK] {
    std::array::from_fn(|i| {
        gens.iter().filter(|g| g.fundamental_index() == Some(i + 1)).map(RayGenerator::signature).collect()
    })
}

fn generators_by_weight() -> &'static [Vec<Signature>; RANK] {
    static GENS: OnceLock<[Vec<Signature>; RANK]> = OnceLock::new();
    GENS.get_or_init(|| group_by_weight(&transcribed_generators()))
}

/// Writes σ as a sum of fundamental essential signatures.
///
/// Peels off one generator at a time: the first fundamental weight with
/// k_i > 0, the first τ of its table with σ − τ still a cone point. Falls
/// back to full backtracking if a choice dead-ends.
pub fn decompose(sigma: &Signature) -> Result<Vec<RayGenerator>> {
    decompose_grouped(sigma, generators_by_weight())
}

/// As [`decompose`], over an arbitrary set of generators with fundamental
/// highest weights. Generators of other weights are ignored.
pub fn decompose_with(sigma: &Signature, gens: &[RayGenerator]) -> Result<Vec<RayGenerator>> {
    decompose_grouped(sigma, &group_by_weight(gens))
}

fn decompose_grouped(sigma: &Signature, gens: &[Vec<Signature>; RANK]) -> Result<Vec<RayGenerator>> {
    if !member(sigma) {
        return Err(Error::NotMember(*sigma));
    }
    let mut failed = HashSet::new();
    let mut parts = Vec::new();
    if peel(sigma, gens, &mut failed, &mut parts) {
        parts.reverse();
        Ok(parts.iter().map(RayGenerator::from_signature).collect())
    } else {
        Err(Error::Decomposition(*sigma))
    }
}

fn peel(sigma: &Signature, gens: &[Vec<Signature>; RANK], failed: &mut HashSet<Signature>, parts: &mut Vec<Signature>) -> bool {
    if sigma.hw.is_zero() {
        return sigma.p == [0; NUM_POSITIVE];
    }
    if failed.contains(sigma) {
        return false;
    }
    for i in 0..RANK {
        if sigma.hw.k[i] == 0 {
            continue;
        }
        for tau in &gens[i] {
            let Some(rest) = sigma.checked_sub(tau) else { continue };
            if member(&rest) && peel(&rest, gens, failed, parts) {
                parts.push(*tau);
                return true;
            }
        }
    }
    failed.insert(*sigma);
    false
}

/// One λ of the sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepRow {
    pub lambda: DomWeight,
    pub count: Option<u64>,
    pub weyl: String,
    pub equal: Option<bool>,
    pub elapsed_ms: u64,
    pub skipped_reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepReport {
    pub max_total: u32,
    pub point_budget: u64,
    pub rows: Vec<SweepRow>,
}

impl SweepReport {
    pub fn checked(&self) -> usize {
        self.rows.iter().filter(|r| r.count.is_some()).count()
    }

    pub fn skipped(&self) -> usize {
        self.rows.iter().filter(|r| r.skipped_reason.is_some()).count()
    }

    pub fn mismatches(&self) -> Vec<&SweepRow> {
        self.rows.iter().filter(|r| r.equal == Some(false)).collect()
    }

    pub fn all_equal(&self) -> bool {
        self.mismatches().is_empty()
    }
}

fn sweep_row(lambda: &DomWeight, point_budget: u64) -> SweepRow {
    let start = Instant::now();
    let weyl = weyl_dim(lambda);
    if weyl > BigUint::from(point_budget) {
        return SweepRow {
            lambda: *lambda,
            count: None,
            weyl: weyl.to_string(),
            equal: None,
            elapsed_ms: start.elapsed().as_millis() as u64,
            skipped_reason: Some(format!("weyl_dim {weyl} exceeds point budget {point_budget}")),
        };
    }
    let count = count_points_u64(lambda);
    SweepRow {
        lambda: *lambda,
        count: Some(count),
        equal: Some(BigUint::from(count) == weyl),
        weyl: weyl.to_string(),
        elapsed_ms: start.elapsed().as_millis() as u64,
        skipped_reason: None,
    }
}

/// Compares |Σ^f(λ)| with dim V(λ) for every λ with Σ k_i ≤ `max_total`.
/// Rows whose Weyl dimension exceeds `point_budget` are reported as skipped.
pub fn verify_dimension_sweep(max_total: u32, point_budget: u64, jobs: usize) -> SweepReport {
    let weights = DomWeight::up_to_total(max_total);
    let run = || weights.par_iter().map(|l| sweep_row(l, point_budget)).collect::<Vec<_>>();
    let rows = match rayon::ThreadPoolBuilder::new().num_threads(jobs.max(1)).build() {
        Ok(pool) => pool.install(run),
        Err(_) => run(),
    };
    SweepReport { max_total, point_budget, rows }
}
