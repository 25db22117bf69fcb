//! Double description: facets of the cone generated by a finite set of
//! integer vectors.
//!
//! The facet normals of cone(R) are the extreme rays of the dual cone
//! {n : ⟨n, r⟩ ≥ 0 ∀ r ∈ R}. When R does not span the ambient space the dual
//! has a lineality space (the orthogonal complement of span R); we quotient
//! it out by working in coordinates of a basis of span R, where the dual is
//! pointed, and report the complement as equalities.
//!
//! Arithmetic is fraction-free over big integers and every ray is kept
//! primitive. Adjacency uses the combinatorial test on zero sets, which is
//! exact for a pointed cone.

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::linalg::{kernel_basis, primitive, primitive_integer, Rational, RankAccumulator, SparseVec};

/// H-description of cone(R) relative to its span.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeDescription {
    pub ambient_dim: usize,
    pub span_dim: usize,
    /// Primitive normals n with ⟨n, x⟩ ≥ 0 on the cone, each lying in span R,
    /// sorted lexicographically.
    pub facets: Vec<Vec<BigInt>>,
    /// Primitive basis of the orthogonal complement of span R: the cone
    /// satisfies ⟨e, x⟩ = 0 for each of these.
    pub equalities: Vec<Vec<BigInt>>,
}

impl ConeDescription {
    pub fn lineality_dim(&self) -> usize {
        self.ambient_dim - self.span_dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct ZeroSet(Vec<u64>);

impl ZeroSet {
    fn new(n: usize) -> Self {
        ZeroSet(vec![0; n.div_ceil(64).max(1)])
    }
    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn len(&self) -> u32 {
        self.0.iter().map(|w| w.count_ones()).sum()
    }
    fn and(&self, o: &ZeroSet) -> ZeroSet {
        ZeroSet(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn subset_of(&self, o: &ZeroSet) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a & !b == 0)
    }
}

struct DdRay {
    v: Vec<BigInt>,
    zeros: ZeroSet,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Extreme rays of the pointed cone {y : A y ≥ 0}.
///
/// `constraints` must have full column rank. Rows are inserted in the given
/// order after an initial basis made of the first independent rows.
pub fn extreme_rays(constraints: &[Vec<BigInt>]) -> Vec<Vec<BigInt>> {
    let Some(d) = constraints.first().map(Vec::len) else {
        return Vec::new();
    };
    let m = constraints.len();
    let mut acc = RankAccumulator::<usize>::new();
    let mut basis = Vec::new();
    for (i, row) in constraints.iter().enumerate() {
        let sv = SparseVec::from_entries(row.iter().enumerate().map(|(j, x)| (j, Rational::from_integer(x.clone()))));
        if acc.insert(&sv) {
            basis.push(i);
            if basis.len() == d {
                break;
            }
        }
    }
    assert_eq!(basis.len(), d, "constraint matrix must have full column rank");

    // Initial cone {y : A_B y ≥ 0}: its rays are the columns of A_B^{-1}.
    let inv = invert(&basis.iter().map(|&i| constraints[i].clone()).collect::<Vec<_>>());
    let mut rays: Vec<DdRay> = (0..d)
        .map(|t| {
            let col: Vec<Rational> = (0..d).map(|r| inv[r][t].clone()).collect();
            let mut zeros = ZeroSet::new(m);
            for (s, &i) in basis.iter().enumerate() {
                if s != t {
                    zeros.insert(i);
                }
            }
            DdRay { v: primitive_integer(&col), zeros }
        })
        .collect();

    let need = d.saturating_sub(2) as u32;
    for (c, a) in constraints.iter().enumerate() {
        if basis.contains(&c) {
            continue;
        }
        let vals: Vec<BigInt> = rays.iter().map(|r| dot(a, &r.v)).collect();
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_positive()).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| vals[i].is_negative()).collect();
        let mut fresh = Vec::new();
        for &p in &pos {
            for &n in &neg {
                let common = rays[p].zeros.and(&rays[n].zeros);
                if common.len() < need {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(q, r)| q != p && q != n && common.subset_of(&r.zeros));
                if blocked {
                    continue;
                }
                let sp = &vals[p];
                let sn = -&vals[n];
                let v: Vec<BigInt> = rays[p].v.iter().zip(&rays[n].v).map(|(x, y)| sn.clone() * x + sp * y).collect();
                let mut zeros = common;
                zeros.insert(c);
                fresh.push(DdRay { v: primitive(&v), zeros });
            }
        }
        let mut next: Vec<DdRay> = Vec::with_capacity(pos.len() + fresh.len());
        for (i, mut r) in rays.into_iter().enumerate() {
            if vals[i].is_negative() {
                continue;
            }
            if vals[i].is_zero() {
                r.zeros.insert(c);
            }
            next.push(r);
        }
        next.extend(fresh);
        rays = next;
    }
    let mut out: Vec<Vec<BigInt>> = rays.into_iter().map(|r| r.v).collect();
    out.sort();
    out.dedup();
    out
}

fn invert(rows: &[Vec<BigInt>]) -> Vec<Vec<Rational>> {
    let d = rows.len();
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut row: Vec<Rational> = r.iter().cloned().map(Rational::from_integer).collect();
            row.extend((0..d).map(|j| if i == j { Rational::from_integer(1.into()) } else { Rational::zero() }));
            row
        })
        .collect();
    for col in 0..d {
        let piv = (col..d).find(|&r| !m[r][col].is_zero()).expect("basis rows are independent");
        m.swap(col, piv);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..d {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for j in 0..2 * d {
                    let t = &f * &m[col][j];
                    m[r][j] -= t;
                }
            }
        }
    }
    m.into_iter().map(|r| r[d..].to_vec()).collect()
}

/// Facets of cone(rays), relative to span(rays).
pub fn facets_of_cone(rays: &[Vec<BigInt>]) -> ConeDescription {
    let ambient_dim = rays.first().map_or(0, Vec::len);
    let mut sorted: Vec<Vec<BigInt>> = rays.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    sorted.sort();
    sorted.dedup();

    // Basis of span R taken from the rays themselves.
    let mut acc = RankAccumulator::<usize>::new();
    let mut basis: Vec<Vec<BigInt>> = Vec::new();
    for r in &sorted {
        let sv = SparseVec::from_entries(r.iter().enumerate().map(|(j, x)| (j, Rational::from_integer(x.clone()))));
        if acc.insert(&sv) {
            basis.push(r.clone());
        }
    }
    let span_dim = basis.len();
    let dense: Vec<Vec<Rational>> =
        sorted.iter().map(|r| r.iter().cloned().map(Rational::from_integer).collect()).collect();
    let mut equalities: Vec<Vec<BigInt>> =
        kernel_basis(&dense, ambient_dim).iter().map(|k| primitive_integer(k)).collect();
    equalities.sort();

    if span_dim == 0 {
        return ConeDescription { ambient_dim, span_dim, facets: Vec::new(), equalities };
    }
    // n = Σ_t y_t b_t; constraint rows A[s][t] = ⟨r_s, b_t⟩.
    let a: Vec<Vec<BigInt>> = sorted.iter().map(|r| basis.iter().map(|b| dot(r, b)).collect()).collect();
    let mut facets: Vec<Vec<BigInt>> = extreme_rays(&a)
        .iter()
        .map(|y| {
            let n: Vec<BigInt> = (0..ambient_dim).map(|j| basis.iter().zip(y).map(|(b, c)| c * &b[j]).sum()).collect();
            primitive(&n)
        })
        .collect();
    facets.sort();
    facets.dedup();
    ConeDescription { ambient_dim, span_dim, facets, equalities }
}
