//! D4 root data in the fixed positive-root numbering, weight coordinates,
//! the pairing, and the Weyl dimension formula.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::OnceLock;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use crate::linalg::Rational;
use crate::signatures::Signature;

pub const RANK: usize = 4;
pub const NUM_POSITIVE: usize = 12;

/// A weight in ε-coordinates.
///
/// Stored as twice the coordinates, so spin weights like (1/2,1/2,1/2,1/2)
/// stay integral. All arithmetic on weights is exact.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EpsWeight {
    twice: [i64; RANK],
}

impl EpsWeight {
    pub const ZERO: EpsWeight = EpsWeight { twice: [0; RANK] };

    pub fn from_ints(c: [i64; RANK]) -> Self {
        Self { twice: c.map(|x| 2 * x) }
    }

    pub fn from_twice(twice: [i64; RANK]) -> Self {
        Self { twice }
    }

    pub fn twice(&self) -> [i64; RANK] {
        self.twice
    }

    pub fn coords(&self) -> [Rational; RANK] {
        self.twice.map(|x| Rational::new(BigInt::from(x), BigInt::from(2)))
    }

    /// Unit weight ε_i (0-based `i`).
    pub fn eps(i: usize) -> Self {
        let mut c = [0; RANK];
        c[i] = 2;
        Self { twice: c }
    }

    /// Sum of the doubled coordinates' parity; all weights of one module share it.
    pub fn parity_consistent(&self) -> bool {
        let p = self.twice[0].rem_euclid(2);
        self.twice.iter().all(|x| x.rem_euclid(2) == p)
    }

    /// Four times the standard inner product (exact integer).
    fn dot4(&self, other: &EpsWeight) -> i64 {
        self.twice.iter().zip(other.twice.iter()).map(|(a, b)| a * b).sum()
    }
}

impl Add for EpsWeight {
    type Output = EpsWeight;
    fn add(self, o: EpsWeight) -> EpsWeight {
        let mut t = self.twice;
        for (x, y) in t.iter_mut().zip(o.twice) {
            *x += y;
        }
        EpsWeight { twice: t }
    }
}

impl Sub for EpsWeight {
    type Output = EpsWeight;
    fn sub(self, o: EpsWeight) -> EpsWeight {
        self + (-o)
    }
}

impl Neg for EpsWeight {
    type Output = EpsWeight;
    fn neg(self) -> EpsWeight {
        EpsWeight { twice: self.twice.map(|x| -x) }
    }
}

impl Mul<EpsWeight> for i64 {
    type Output = EpsWeight;
    fn mul(self, w: EpsWeight) -> EpsWeight {
        EpsWeight { twice: w.twice.map(|x| self * x) }
    }
}

impl fmt::Display for EpsWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .twice
            .iter()
            .map(|&t| if t % 2 == 0 { format!("{}", t / 2) } else { format!("{t}/2") })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Dominant weight in fundamental coordinates, λ = Σ k_i ω_i.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DomWeight {
    pub k: [u32; RANK],
}

impl DomWeight {
    pub const ZERO: DomWeight = DomWeight { k: [0; RANK] };

    pub fn new(k: [u32; RANK]) -> Self {
        Self { k }
    }

    /// ω_i for `i` in 1..=4.
    pub fn fundamental(i: usize) -> Self {
        let mut k = [0; RANK];
        k[i - 1] = 1;
        Self { k }
    }

    pub fn total(&self) -> u32 {
        self.k.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.k == [0; RANK]
    }

    /// `self - ω_i`, if still dominant.
    pub fn minus_fundamental(&self, i: usize) -> Option<DomWeight> {
        let mut k = self.k;
        k[i - 1] = k[i - 1].checked_sub(1)?;
        Some(DomWeight { k })
    }

    /// All dominant weights with total at most `max_total`, by total and then
    /// descending `k` (so ω_1 precedes ω_2).
    pub fn up_to_total(max_total: u32) -> Vec<DomWeight> {
        let mut out = Vec::new();
        for t in 0..=max_total {
            let mut level = Vec::new();
            for a in 0..=t {
                for b in 0..=t - a {
                    for c in 0..=t - a - b {
                        level.push(DomWeight { k: [a, b, c, t - a - b - c] });
                    }
                }
            }
            level.sort_by(|x, y| y.k.cmp(&x.k));
            out.extend(level);
        }
        out
    }
}

impl Add for DomWeight {
    type Output = DomWeight;
    fn add(self, o: DomWeight) -> DomWeight {
        let mut k = self.k;
        for (x, y) in k.iter_mut().zip(o.k) {
            *x += y;
        }
        DomWeight { k }
    }
}

impl fmt::Display for DomWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d] = self.k;
        write!(f, "{a},{b},{c},{d}")
    }
}

/// A positive root with its 1-based index in the fixed numbering.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Root {
    pub index: usize,
    pub eps: EpsWeight,
}

impl Root {
    /// Text form such as `e1+e2` or `e3-e4`.
    pub fn expression(&self) -> String {
        let mut s = String::new();
        for (i, &t) in self.eps.twice().iter().enumerate() {
            if t == 0 {
                continue;
            }
            let sign = if t > 0 { "+" } else { "-" };
            if !(s.is_empty() && t > 0) {
                s.push_str(sign);
            }
            let m = t.abs() / 2;
            if m != 1 {
                s.push_str(&m.to_string());
            }
            s.push_str(&format!("e{}", i + 1));
        }
        s
    }
}

/// Rank-4 root data: positive roots in a fixed order, the positions of the
/// simple roots among them, and the fundamental weights.
#[derive(Clone, Debug)]
pub struct RootData {
    positive: Vec<Root>,
    simple: [usize; RANK],
    fundamental: [EpsWeight; RANK],
}

impl RootData {
    /// D4 with α_1 = ε_1+ε_2, …, α_12 = ε_1−ε_2 and simple roots
    /// β_1 = α_12, β_2 = α_11, β_3 = α_9, β_4 = α_4.
    pub fn d4() -> Self {
        let table: [[i64; 4]; NUM_POSITIVE] = [
            [1, 1, 0, 0],
            [0, 1, 1, 0],
            [1, 0, 1, 0],
            [0, 0, 1, 1],
            [0, 1, 0, 1],
            [1, 0, 0, 1],
            [1, 0, -1, 0],
            [1, 0, 0, -1],
            [0, 0, 1, -1],
            [0, 1, 0, -1],
            [0, 1, -1, 0],
            [1, -1, 0, 0],
        ];
        let positive = table
            .iter()
            .enumerate()
            .map(|(i, c)| Root { index: i + 1, eps: EpsWeight::from_ints(*c) })
            .collect();
        let fundamental = [
            EpsWeight::from_twice([2, 0, 0, 0]),
            EpsWeight::from_twice([2, 2, 0, 0]),
            EpsWeight::from_twice([1, 1, 1, -1]),
            EpsWeight::from_twice([1, 1, 1, 1]),
        ];
        Self { positive, simple: [12, 11, 9, 4], fundamental }
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// α_i for 1-based `i`.
    pub fn root(&self, index: usize) -> EpsWeight {
        self.positive[index - 1].eps
    }

    /// β_j for 1-based `j`.
    pub fn simple_root(&self, j: usize) -> EpsWeight {
        self.root(self.simple[j - 1])
    }

    pub fn simple_indices(&self) -> [usize; RANK] {
        self.simple
    }

    /// ω_i for 1-based `i`.
    pub fn fundamental_weight(&self, i: usize) -> EpsWeight {
        self.fundamental[i - 1]
    }

    pub fn to_eps(&self, lambda: &DomWeight) -> EpsWeight {
        lambda
            .k
            .iter()
            .zip(self.fundamental.iter())
            .fold(EpsWeight::ZERO, |acc, (&k, w)| acc + (k as i64) * *w)
    }

    pub fn rho(&self) -> EpsWeight {
        self.to_eps(&DomWeight::new([1; RANK]))
    }

    /// Coordinates of `w` in the simple-root basis. Exact because every simple
    /// root has squared length 2, so the coordinate along β_j is ⟨w, ω_j⟩.
    pub fn simple_coords(&self, w: &EpsWeight) -> [Rational; RANK] {
        std::array::from_fn(|j| pairing(w, &self.fundamental[j]))
    }

    pub fn weyl_dim(&self, lambda: &DomWeight) -> BigUint {
        let rho = self.rho();
        let shifted = self.to_eps(lambda) + rho;
        let mut q = Rational::one();
        for r in &self.positive {
            q *= pairing(&shifted, &r.eps) / pairing(&rho, &r.eps);
        }
        assert!(q.is_integer() && q.is_positive(), "Weyl dimension {q} is not a positive integer");
        q.to_integer().to_biguint().expect("positive")
    }
}

pub fn d4() -> &'static RootData {
    static D4: OnceLock<RootData> = OnceLock::new();
    D4.get_or_init(RootData::d4)
}

pub fn positive_roots() -> &'static [Root] {
    d4().positive_roots()
}

pub fn to_eps(lambda: &DomWeight) -> EpsWeight {
    d4().to_eps(lambda)
}

/// Standard inner product in ε-coordinates. All D4 roots have squared
/// length 2, so this is also the pairing of a weight with a coroot.
pub fn pairing(mu: &EpsWeight, v: &EpsWeight) -> Rational {
    Rational::new(BigInt::from(mu.dot4(v)), BigInt::from(4))
}

/// Integer pairing when both sides are known to pair integrally (root against weight).
pub fn pairing_int(mu: &EpsWeight, root: &EpsWeight) -> i64 {
    let d = mu.dot4(root);
    debug_assert_eq!(d % 4, 0);
    d / 4
}

/// λ − Σ p_i α_i.
pub fn signature_weight(sigma: &Signature) -> EpsWeight {
    let data = d4();
    sigma
        .p
        .iter()
        .enumerate()
        .fold(data.to_eps(&sigma.hw), |acc, (i, &p)| acc - (p as i64) * data.root(i + 1))
}

pub fn weyl_dim(lambda: &DomWeight) -> BigUint {
    d4().weyl_dim(lambda)
}
