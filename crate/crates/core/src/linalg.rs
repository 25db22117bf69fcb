//! Exact rational scalars, sparse vectors and an incremental rank test.
//!
//! Everything downstream (weights, representation matrices, signature
//! vectors, cone computations) is carried in these types, so no floating
//! point ever enters a rank or span decision.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a
/// positive denominator.
pub type Rational = num_rational::BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Sparse vector over [`Rational`] with ordered keys.
///
/// No stored entry is ever zero, so `len()` is the support size and two
/// vectors are equal iff their maps are equal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseVec<K: Ord> {
    entries: BTreeMap<K, Rational>,
}

impl<K: Ord> Default for SparseVec<K> {
    fn default() -> Self {
        Self { entries: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> SparseVec<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn unit(key: K) -> Self {
        let mut v = Self::new();
        v.entries.insert(key, Rational::one());
        v
    }

    pub fn from_entries<I: IntoIterator<Item = (K, Rational)>>(entries: I) -> Self {
        let mut v = Self::new();
        for (k, c) in entries {
            v.add_at(k, &c);
        }
        v
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, key: &K) -> Option<&Rational> {
        self.entries.get(key)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Rational)> {
        self.entries.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.entries.keys()
    }

    /// Smallest key with a nonzero coefficient.
    pub fn leading(&self) -> Option<(&K, &Rational)> {
        self.entries.iter().next()
    }

    /// Adds `c` to the coefficient at `key`, dropping it if it cancels.
    pub fn add_at(&mut self, key: K, c: &Rational) {
        if c.is_zero() {
            return;
        }
        match self.entries.get_mut(&key) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.entries.remove(&key);
                }
            }
            None => {
                self.entries.insert(key, c.clone());
            }
        }
    }

    /// `self += c * other`.
    pub fn axpy(&mut self, c: &Rational, other: &SparseVec<K>) {
        if c.is_zero() {
            return;
        }
        for (k, x) in &other.entries {
            self.add_at(k.clone(), &(c * x));
        }
    }

    pub fn scale(&mut self, c: &Rational) {
        if c.is_zero() {
            self.entries.clear();
            return;
        }
        for x in self.entries.values_mut() {
            *x *= c;
        }
    }

    pub fn scaled(&self, c: &Rational) -> Self {
        let mut v = self.clone();
        v.scale(c);
        v
    }
}

impl<K: Ord> IntoIterator for SparseVec<K> {
    type Item = (K, Rational);
    type IntoIter = std::collections::btree_map::IntoIter<K, Rational>;
    fn into_iter(self) -> Self::IntoIter {
        self.entries.into_iter()
    }
}

/// `u + c * v` with cancelled entries dropped.
pub fn scale_add<K: Ord + Clone>(u: &SparseVec<K>, c: &Rational, v: &SparseVec<K>) -> SparseVec<K> {
    let mut out = u.clone();
    out.axpy(c, v);
    out
}

/// Span-membership accumulator.
///
/// Rows are kept in fully reduced echelon form: every row is monic at its
/// pivot (its smallest key) and no row has a nonzero coefficient at another
/// row's pivot.
#[derive(Clone, Debug)]
pub struct RankAccumulator<K: Ord> {
    pivots: BTreeMap<K, SparseVec<K>>,
}

impl<K: Ord> Default for RankAccumulator<K> {
    fn default() -> Self {
        Self { pivots: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> RankAccumulator<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn rows(&self) -> impl Iterator<Item = &SparseVec<K>> {
        self.pivots.values()
    }

    /// Remainder of `v` after elimination against the stored rows. Zero iff
    /// `v` lies in their span.
    pub fn reduce(&self, v: &SparseVec<K>) -> SparseVec<K> {
        let mut r = v.clone();
        // Rows carry no foreign pivots, so one pass over the pivot keys
        // present in `v` is enough.
        let hits: Vec<K> = v.keys().filter(|k| self.pivots.contains_key(*k)).cloned().collect();
        for k in hits {
            if let Some(c) = r.get(&k).cloned() {
                r.axpy(&-c, &self.pivots[&k]);
            }
        }
        r
    }

    pub fn contains(&self, v: &SparseVec<K>) -> bool {
        self.reduce(v).is_zero()
    }

    /// Inserts `v`; returns `true` iff the rank went up.
    pub fn insert(&mut self, v: &SparseVec<K>) -> bool {
        let mut r = self.reduce(v);
        let Some((pivot, lead)) = r.leading().map(|(k, c)| (k.clone(), c.clone())) else {
            return false;
        };
        r.scale(&lead.recip());
        for row in self.pivots.values_mut() {
            if let Some(c) = row.get(&pivot).cloned() {
                row.axpy(&-c, &r);
            }
        }
        self.pivots.insert(pivot, r);
        true
    }
}

/// Primitive integer multiple of a rational vector (same direction).
pub fn primitive_integer(v: &[Rational]) -> Vec<BigInt> {
    use num_integer::Integer;
    let mut l = BigInt::one();
    for x in v {
        l = l.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    primitive(&ints)
}

/// Divides an integer vector by the gcd of its entries.
pub fn primitive(v: &[BigInt]) -> Vec<BigInt> {
    use num_integer::Integer;
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        return v.to_vec();
    }
    v.iter().map(|x| x / &g).collect()
}

/// Rank of a dense rational matrix by plain Gaussian elimination.
pub fn dense_rank(rows: &[Vec<Rational>]) -> usize {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let ncols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = m[rank][col].recip();
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = &m[r][col] * &inv;
                for c in col..ncols {
                    let d = &f * &m[rank][c];
                    m[r][c] -= d;
                }
            }
        }
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    rank
}

/// Basis of the right kernel `{x : M x = 0}` of a dense rational matrix.
pub fn kernel_basis(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivot_cols = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, piv);
        let inv = m[rank][col].recip();
        for c in col..ncols {
            m[rank][c] *= &inv;
        }
        for r in 0..m.len() {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..ncols {
                    let d = &f * &m[rank][c];
                    m[r][c] -= d;
                }
            }
        }
        pivot_cols.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rational::zero(); ncols];
            x[f] = Rational::one();
            for (r, &pc) in pivot_cols.iter().enumerate() {
                x[pc] = -m[r][f].clone();
            }
            x
        })
        .collect()
}

pub fn is_nonnegative(x: &Rational) -> bool {
    !x.is_negative()
}
