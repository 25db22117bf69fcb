//! The cone Σ^f_ℚ spanned by the fundamental essential signatures: its
//! generators, its facets (computed and transcribed), membership, and facet
//! certification.

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::dd::{facets_of_cone, ConeDescription};
use crate::error::{Error, Result};
use crate::linalg::{dense_rank, Rational};
use crate::models::Models;
use crate::roots::{DomWeight, NUM_POSITIVE, RANK};
use crate::signatures::{essential_signatures, Signature, DEFAULT_AMBIENT_LIMIT};
use crate::tables::{fundamental_table, CONE_INEQUALITIES};

pub const DIM: usize = RANK + NUM_POSITIVE;

/// A fundamental essential signature as a 16-vector (k_1..k_4, p_1..p_12).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct RayGenerator {
    pub v: [i64; DIM],
}

impl RayGenerator {
    pub fn from_signature(s: &Signature) -> Self {
        Self { v: s.as_vector() }
    }

    pub fn signature(&self) -> Signature {
        Signature::from_vector(&self.v).expect("generators are nonnegative")
    }

    /// The fundamental weight index i with k = e_i.
    pub fn fundamental_index(&self) -> Option<usize> {
        let k = &self.v[..RANK];
        (k.iter().sum::<i64>() == 1).then(|| k.iter().position(|&x| x == 1).unwrap() + 1)
    }
}

/// Inequality Σ_j a_j p_j ≤ Σ_i b_i k_i, i.e. ⟨(b, −a), x⟩ ≥ 0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FacetNormal {
    pub a: [i64; NUM_POSITIVE],
    pub b: [i64; RANK],
}

impl FacetNormal {
    pub fn normal(&self) -> [i64; DIM] {
        std::array::from_fn(|i| if i < RANK { self.b[i] } else { -self.a[i - RANK] })
    }

    /// Primitive form of the inequality with normal `n` (sign preserved).
    pub fn from_normal(n: &[i64]) -> Self {
        assert_eq!(n.len(), DIM);
        let g = n.iter().fold(0i64, |g, x| g.gcd(x)).max(1);
        Self {
            a: std::array::from_fn(|j| -n[RANK + j] / g),
            b: std::array::from_fn(|i| n[i] / g),
        }
    }

    fn from_big(n: &[BigInt]) -> Self {
        let small: Vec<i64> = n.iter().map(|x| x.to_i64().expect("facet coefficients fit i64")).collect();
        Self::from_normal(&small)
    }

    pub fn is_primitive(&self) -> bool {
        self.normal().iter().fold(0i64, |g, x| g.gcd(x)) == 1
    }

    /// p_j ≥ 0 (1-based `j`).
    pub fn p_nonnegative(j: usize) -> Self {
        let mut a = [0; NUM_POSITIVE];
        a[j - 1] = -1;
        Self { a, b: [0; RANK] }
    }

    /// k_i ≥ 0 (1-based `i`).
    pub fn k_nonnegative(i: usize) -> Self {
        let mut b = [0; RANK];
        b[i - 1] = 1;
        Self { a: [0; NUM_POSITIVE], b }
    }

    /// Whether this is one of the coordinate halfspaces p_j ≥ 0 or k_i ≥ 0.
    pub fn is_coordinate(&self) -> bool {
        let n = self.normal();
        n.iter().filter(|x| **x != 0).count() == 1 && n.iter().all(|x| *x >= 0)
    }

    pub fn slack(&self, x: &[i64; DIM]) -> i64 {
        self.normal().iter().zip(x).map(|(a, b)| a * b).sum()
    }

    pub fn holds(&self, s: &Signature) -> bool {
        self.slack(&s.as_vector()) >= 0
    }
}

impl fmt::Display for FacetNormal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn side(coeffs: &[i64], var: &str) -> String {
            let terms: Vec<String> = coeffs
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0)
                .map(|(i, &c)| match c {
                    1 => format!("{var}{}", i + 1),
                    -1 => format!("-{var}{}", i + 1),
                    _ => format!("{c}{var}{}", i + 1),
                })
                .collect();
            if terms.is_empty() {
                "0".into()
            } else {
                terms.join("+").replace("+-", "-")
            }
        }
        write!(f, "{} <= {}", side(&self.a, "p"), side(&self.b, "k"))
    }
}

/// Sorted by (a, b) lexicographically.
pub fn canonicalize(facets: &mut Vec<FacetNormal>) {
    facets.sort_by_key(|x| (x.a, x.b));
    facets.dedup();
}

/// The transcribed table rows as generators, ω_1 then ω_2, ω_3, ω_4, in
/// table order.
pub fn transcribed_generators() -> Vec<RayGenerator> {
    (1..=RANK)
        .flat_map(|i| {
            fundamental_table(i)
                .iter()
                .map(move |p| RayGenerator::from_signature(&Signature::new(DomWeight::fundamental(i), *p)))
        })
        .collect()
}

/// Generators computed from the representation models, checked against the
/// transcribed tables. Returned in table order.
pub fn fundamental_generators(models: &Models) -> Result<Vec<RayGenerator>> {
    let mut diff = String::new();
    for i in 1..=RANK {
        let computed: BTreeSet<[u32; NUM_POSITIVE]> = essential_signatures(models, &DomWeight::fundamental(i), DEFAULT_AMBIENT_LIMIT)?
            .iter()
            .map(|s| s.p)
            .collect();
        let table: BTreeSet<[u32; NUM_POSITIVE]> = fundamental_table(i).iter().copied().collect();
        for p in computed.difference(&table) {
            diff.push_str(&format!("+ ω{i} {p:?}\n"));
        }
        for p in table.difference(&computed) {
            diff.push_str(&format!("- ω{i} {p:?}\n"));
        }
    }
    if !diff.is_empty() {
        return Err(Error::TableMismatch(diff));
    }
    Ok(transcribed_generators())
}

/// Outcome of the dual-description computation in 16 dimensions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DualDescription {
    pub facets: Vec<FacetNormal>,
    pub span_dim: usize,
    /// Equalities satisfied by the whole cone (empty when full-dimensional).
    pub equalities: Vec<[i64; DIM]>,
}

/// Facets of the cone spanned by `rays`, canonicalized.
pub fn dual_description(rays: &[RayGenerator]) -> Result<DualDescription> {
    if rays.is_empty() {
        return Err(Error::Invalid("dual description needs at least one ray".into()));
    }
    let big: Vec<Vec<BigInt>> = rays.iter().map(|r| r.v.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let ConeDescription { facets, equalities, span_dim, .. } = facets_of_cone(&big);
    let mut facets: Vec<FacetNormal> = facets.iter().map(|n| FacetNormal::from_big(n)).collect();
    canonicalize(&mut facets);
    let equalities = equalities
        .iter()
        .map(|e| std::array::from_fn(|i| e[i].to_i64().expect("small")))
        .collect();
    Ok(DualDescription { facets, span_dim, equalities })
}

/// The transcribed inequality list, in item order.
pub fn transcribed_inequalities() -> Vec<FacetNormal> {
    CONE_INEQUALITIES
        .iter()
        .map(|q| FacetNormal { a: q.a.map(i64::from), b: q.b.map(i64::from) })
        .collect()
}

/// Membership in Σ^f(λ): all transcribed inequalities, p ≥ 0, λ dominant.
pub fn member(s: &Signature) -> bool {
    // Unsigned fields already encode p_j ≥ 0 and k_i ≥ 0.
    let k = s.hw.k;
    CONE_INEQUALITIES.iter().all(|q| {
        let lhs: u64 = q.a.iter().zip(&s.p).map(|(a, p)| u64::from(*a) * u64::from(*p)).sum();
        let rhs: u64 = q.b.iter().zip(&k).map(|(b, k)| u64::from(*b) * u64::from(*k)).sum();
        lhs <= rhs
    })
}

/// Per-facet certificate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetCertificate {
    pub facet: Vec<BigInt>,
    /// Nonnegative on every ray.
    pub valid: bool,
    /// Rank of the rays on which the facet is tight.
    pub tight_rank: usize,
    pub certified: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertificationReport {
    pub span_dim: usize,
    pub facets: Vec<FacetCertificate>,
    /// Rays that are tight on no facet.
    pub rays_off_all_facets: Vec<usize>,
}

impl CertificationReport {
    pub fn all_certified(&self) -> bool {
        self.facets.iter().all(|f| f.certified)
    }

    pub fn failures(&self) -> Vec<&FacetCertificate> {
        self.facets.iter().filter(|f| !f.certified).collect()
    }
}

/// Checks that each normal is valid on all rays and tight on a set of rays
/// spanning a hyperplane of span(rays).
pub fn certify(rays: &[Vec<BigInt>], normals: &[Vec<BigInt>]) -> CertificationReport {
    let to_rat = |v: &Vec<BigInt>| v.iter().cloned().map(Rational::from_integer).collect::<Vec<_>>();
    let all: Vec<Vec<Rational>> = rays.iter().map(to_rat).collect();
    let span_dim = dense_rank(&all);
    let mut touched = vec![false; rays.len()];
    let facets = normals
        .iter()
        .map(|n| {
            let vals: Vec<BigInt> = rays.iter().map(|r| r.iter().zip(n).map(|(a, b)| a * b).sum()).collect();
            let valid = vals.iter().all(|v| !v.is_negative());
            let tight: Vec<Vec<Rational>> =
                vals.iter().zip(&all).filter(|(v, _)| v.is_zero()).map(|(_, r)| r.clone()).collect();
            let tight_rank = dense_rank(&tight);
            let certified = valid && span_dim > 0 && tight_rank == span_dim - 1 && vals.iter().any(|v| v.is_positive());
            if certified {
                for (i, v) in vals.iter().enumerate() {
                    if v.is_zero() {
                        touched[i] = true;
                    }
                }
            }
            FacetCertificate { facet: n.clone(), valid, tight_rank, certified }
        })
        .collect();
    let rays_off_all_facets = (0..rays.len()).filter(|&i| !touched[i]).collect();
    CertificationReport { span_dim, facets, rays_off_all_facets }
}

pub fn certify_facets(rays: &[RayGenerator], facets: &[FacetNormal]) -> CertificationReport {
    let rays: Vec<Vec<BigInt>> = rays.iter().map(|r| r.v.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let normals: Vec<Vec<BigInt>> = facets.iter().map(|f| f.normal().iter().map(|&x| BigInt::from(x)).collect()).collect();
    certify(&rays, &normals)
}

/// Set comparison of a computed facet list with the transcription.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetComparison {
    /// Expected (transcribed ∪ p_j ≥ 0 ∪ certified k_i ≥ 0), canonical.
    pub expected: Vec<FacetNormal>,
    /// Computed but not expected.
    pub extra: Vec<FacetNormal>,
    /// Expected but not computed.
    pub missing: Vec<FacetNormal>,
    /// Which k_i ≥ 0 are facets of the generator cone.
    pub k_facets: [bool; RANK],
}

impl FacetComparison {
    pub fn is_match(&self) -> bool {
        self.extra.is_empty() && self.missing.is_empty()
    }
}

pub fn compare_with_table(rays: &[RayGenerator], computed: &[FacetNormal]) -> FacetComparison {
    let k_candidates: Vec<FacetNormal> = (1..=RANK).map(FacetNormal::k_nonnegative).collect();
    let report = certify_facets(rays, &k_candidates);
    let k_facets: [bool; RANK] = std::array::from_fn(|i| report.facets[i].certified);

    let mut expected = transcribed_inequalities();
    expected.extend((1..=NUM_POSITIVE).map(FacetNormal::p_nonnegative));
    expected.extend(k_candidates.iter().zip(k_facets).filter(|(_, f)| *f).map(|(c, _)| *c));
    for f in expected.iter_mut() {
        *f = FacetNormal::from_normal(&f.normal());
    }
    canonicalize(&mut expected);
    let exp: BTreeSet<FacetNormal> = expected.iter().copied().collect();
    let got: BTreeSet<FacetNormal> = computed.iter().copied().collect();
    FacetComparison {
        extra: got.difference(&exp).copied().collect(),
        missing: exp.difference(&got).copied().collect(),
        expected,
        k_facets,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn generator_table_shape() {
        let g = transcribed_generators();
        assert_eq!(g.len(), 52);
        assert!(g.iter().all(|r| r.v.iter().all(|x| *x >= 0)));
        assert!(g.contains(&RayGenerator::from_signature(&Signature::zero(DomWeight::fundamental(1)))));
        let mut p = [0; 12];
        p[0] = 2;
        assert!(g.contains(&RayGenerator::from_signature(&Signature::new(DomWeight::fundamental(2), p))));
    }

    #[test]
    fn membership_examples() {
        for l in DomWeight::up_to_total(3) {
            assert!(member(&Signature::zero(l)));
        }
        let mut p = [0; 12];
        p[11] = 2;
        assert!(!member(&Signature::new(DomWeight::fundamental(1), p)));
        for g in transcribed_generators() {
            assert!(member(&g.signature()), "{}", g.signature());
        }
    }

    #[test]
    fn orthant_certifies() {
        let rays = vec![iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[0, 0, 1])];
        let r = certify(&rays, &rays);
        assert!(r.all_certified());
        assert!(r.facets.iter().all(|f| f.tight_rank == 2));
        assert!(r.rays_off_all_facets.is_empty());
    }

    #[test]
    fn redundant_inequality_fails_certification() {
        let rays = vec![iv(&[1, 0, 0]), iv(&[0, 1, 0]), iv(&[0, 0, 1])];
        let r = certify(&rays, &[iv(&[1, 1, 0])]);
        assert!(r.facets[0].valid);
        assert_eq!(r.facets[0].tight_rank, 1);
        assert!(!r.all_certified());
        let r = certify(&rays, &[iv(&[1, -1, 0])]);
        assert!(!r.facets[0].valid);
    }

    #[test]
    fn facet_normal_forms() {
        let f = FacetNormal::from_normal(&[2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, -2]);
        assert_eq!(f, transcribed_inequalities()[0]);
        assert!(f.is_primitive());
        assert_eq!(f.to_string(), "p12 <= k1");
        assert!(FacetNormal::p_nonnegative(3).is_coordinate());
        assert!(!f.is_coordinate());
        assert_eq!(FacetNormal::p_nonnegative(3).to_string(), "-p3 <= 0");
    }
}
