//! Signatures, their partial-sum order, and essential-signature detection.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Sub};

use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::RankAccumulator;
use crate::models::Models;
use crate::roots::{d4, to_eps, weyl_dim, DomWeight, EpsWeight, NUM_POSITIVE, RANK};

/// Default bound on the ambient tensor dimension for representation-theoretic
/// computations.
pub const DEFAULT_AMBIENT_LIMIT: u128 = 1_000_000;

/// (λ; p_1, …, p_12).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Signature {
    pub hw: DomWeight,
    pub p: [u32; NUM_POSITIVE],
}

impl Signature {
    pub fn new(hw: DomWeight, p: [u32; NUM_POSITIVE]) -> Self {
        Self { hw, p }
    }

    pub fn zero(hw: DomWeight) -> Self {
        Self { hw, p: [0; NUM_POSITIVE] }
    }

    /// Partial sums q_i = p_1 + … + p_{13−i}.
    pub fn order_key(&self) -> OrderKey {
        let mut q = [0u32; NUM_POSITIVE];
        let mut acc = 0;
        for j in 0..NUM_POSITIVE {
            acc += self.p[j];
            // q_{12-j} (1-based) is the sum of the first j+1 exponents.
            q[NUM_POSITIVE - 1 - j] = acc;
        }
        OrderKey { q }
    }

    /// Order within one highest weight.
    pub fn compare(&self, other: &Signature) -> Result<Ordering> {
        if self.hw != other.hw {
            return Err(Error::HighestWeightMismatch(self.hw, other.hw));
        }
        Ok(self.order_key().cmp(&other.order_key()))
    }

    /// The 16-vector (k_1..k_4, p_1..p_12).
    pub fn as_vector(&self) -> [i64; RANK + NUM_POSITIVE] {
        std::array::from_fn(|i| if i < RANK { self.hw.k[i] as i64 } else { self.p[i - RANK] as i64 })
    }

    pub fn from_vector(v: &[i64]) -> Option<Signature> {
        if v.len() != RANK + NUM_POSITIVE || v.iter().any(|x| *x < 0) {
            return None;
        }
        Some(Signature {
            hw: DomWeight::new(std::array::from_fn(|i| v[i] as u32)),
            p: std::array::from_fn(|i| v[RANK + i] as u32),
        })
    }

    /// Componentwise difference in all 16 coordinates, if nonnegative.
    pub fn checked_sub(&self, other: &Signature) -> Option<Signature> {
        let mut k = self.hw.k;
        for (a, b) in k.iter_mut().zip(other.hw.k) {
            *a = a.checked_sub(b)?;
        }
        let mut p = self.p;
        for (a, b) in p.iter_mut().zip(other.p) {
            *a = a.checked_sub(b)?;
        }
        Some(Signature { hw: DomWeight::new(k), p })
    }
}

impl Add for Signature {
    type Output = Signature;
    fn add(self, o: Signature) -> Signature {
        let mut p = self.p;
        for (a, b) in p.iter_mut().zip(o.p) {
            *a += b;
        }
        Signature { hw: self.hw + o.hw, p }
    }
}

impl Sub for Signature {
    type Output = Signature;
    fn sub(self, o: Signature) -> Signature {
        self.checked_sub(&o).expect("signature difference must stay nonnegative")
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p: Vec<String> = self.p.iter().map(u32::to_string).collect();
        write!(f, "({}; {})", self.hw, p.join(","))
    }
}

/// Sort key realizing the signature order: lexicographic on (q_1, …, q_12).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrderKey {
    pub q: [u32; NUM_POSITIVE],
}

/// Sorts signatures of one highest weight ascending in the signature order.
pub fn sort_signatures(sigs: &mut [Signature]) {
    sigs.sort_by_key(|s| (s.hw, s.order_key()));
}

fn root_simple_coords() -> [[i64; RANK]; NUM_POSITIVE] {
    let data = d4();
    std::array::from_fn(|i| {
        let c = data.simple_coords(&data.root(i + 1));
        std::array::from_fn(|j| c[j].to_integer().to_i64().expect("small"))
    })
}

/// All p ≥ 0 with Σ p_i α_i = to_eps(λ) − μ, ascending in the signature order.
pub fn signatures_of_weight(lambda: &DomWeight, mu: &EpsWeight) -> Vec<Signature> {
    let gap = to_eps(lambda) - *mu;
    let coords = d4().simple_coords(&gap);
    if coords.iter().any(|c| !c.is_integer() || c < &num_traits::Zero::zero()) {
        return Vec::new();
    }
    let target: [i64; RANK] = std::array::from_fn(|j| coords[j].to_integer().to_i64().expect("small"));
    let roots = root_simple_coords();
    let mut out = Vec::new();
    let mut p = [0u32; NUM_POSITIVE];
    fill(&roots, 0, target, &mut p, &mut out, *lambda);
    sort_signatures(&mut out);
    out
}

fn fill(
    roots: &[[i64; RANK]; NUM_POSITIVE],
    i: usize,
    rest: [i64; RANK],
    p: &mut [u32; NUM_POSITIVE],
    out: &mut Vec<Signature>,
    hw: DomWeight,
) {
    if i == NUM_POSITIVE {
        if rest == [0; RANK] {
            out.push(Signature { hw, p: *p });
        }
        return;
    }
    let r = roots[i];
    // Every root has a positive simple-root coordinate, which bounds p_i.
    let max = (0..RANK).filter(|&j| r[j] > 0).map(|j| rest[j] / r[j]).min().unwrap_or(0);
    for n in 0..=max {
        p[i] = n as u32;
        let next: [i64; RANK] = std::array::from_fn(|j| rest[j] - n * r[j]);
        fill(roots, i + 1, next, p, out, hw);
    }
    p[i] = 0;
}

fn guard(models: &Models, lambda: &DomWeight, limit: u128) -> Result<()> {
    let dim = models.ambient_dim(lambda);
    if dim > limit {
        return Err(Error::AmbientTooLarge { lambda: *lambda, dim, limit });
    }
    Ok(())
}

/// Essential signatures of one weight class, in ascending order.
fn scan_weight_class(models: &Models, candidates: &[Signature], stop_at: Option<&Signature>) -> Vec<Signature> {
    let mut acc = RankAccumulator::new();
    let mut out = Vec::new();
    for sigma in candidates {
        let v = models.signature_vector(sigma);
        if acc.insert(&v.value) {
            out.push(*sigma);
        }
        if stop_at == Some(sigma) {
            break;
        }
    }
    out
}

/// Essential signatures of highest weight λ, ascending in the signature order.
pub fn essential_signatures(models: &Models, lambda: &DomWeight, limit: u128) -> Result<Vec<Signature>> {
    guard(models, lambda, limit)?;
    let weights = models.ambient_weights(lambda);
    let per_class: Vec<Vec<Signature>> = weights
        .par_iter()
        .map(|mu| scan_weight_class(models, &signatures_of_weight(lambda, mu), None))
        .collect();
    let mut out: Vec<Signature> = per_class.into_iter().flatten().collect();
    sort_signatures(&mut out);
    let expected = weyl_dim(lambda);
    if num_bigint::BigUint::from(out.len()) != expected {
        return Err(Error::DimensionMismatch { lambda: *lambda, found: out.len(), expected: expected.to_string() });
    }
    Ok(out)
}

/// Essential signatures of λ grouped by weight, for weight-multiplicity checks.
pub fn essential_by_weight(models: &Models, lambda: &DomWeight, limit: u128) -> Result<Vec<(EpsWeight, Vec<Signature>)>> {
    guard(models, lambda, limit)?;
    Ok(models
        .ambient_weights(lambda)
        .par_iter()
        .map(|mu| (*mu, scan_weight_class(models, &signatures_of_weight(lambda, mu), None)))
        .filter(|(_, s)| !s.is_empty())
        .collect())
}

pub fn is_essential(models: &Models, sigma: &Signature, limit: u128) -> Result<bool> {
    guard(models, &sigma.hw, limit)?;
    let mu = crate::roots::signature_weight(sigma);
    let candidates = signatures_of_weight(&sigma.hw, &mu);
    Ok(scan_weight_class(models, &candidates, Some(sigma)).last() == Some(sigma))
}
