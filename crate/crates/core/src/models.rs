//! Explicit fundamental representations of so(8) and their tensor products.
//!
//! All structure constants come from one fermionic oscillator realization on
//! four modes acting on the 16-dimensional occupation space:
//!
//! * e_{ε_i−ε_j} = a_i† a_j,  e_{ε_i+ε_j} = a_i† a_j†,  e_{−ε_i−ε_j} = a_j a_i
//! * h_{ε_i} = a_i† a_i − 1/2
//!
//! The two spinor modules are the even and odd occupation halves. The vector
//! and adjoint modules are obtained as the commutator action on the span of
//! the single creation/annihilation operators and on the span of the
//! bilinears, so every model is a Lie algebra homomorphism image of the same
//! operators and no sign is chosen independently.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{rat, rat_frac, RankAccumulator, Rational, SparseVec};
use crate::roots::{d4, pairing, DomWeight, EpsWeight, NUM_POSITIVE, RANK};
use crate::signatures::Signature;

/// Square sparse matrix stored by column images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    cols: Vec<SparseVec<usize>>,
}

impl SparseMatrix {
    pub fn zero(dim: usize) -> Self {
        Self { cols: vec![SparseVec::new(); dim] }
    }

    pub fn dim(&self) -> usize {
        self.cols.len()
    }

    /// Image of basis vector `j`.
    pub fn col(&self, j: usize) -> &SparseVec<usize> {
        &self.cols[j]
    }

    pub fn set(&mut self, row: usize, col: usize, c: Rational) {
        self.cols[col].add_at(row, &c);
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(SparseVec::is_zero)
    }

    pub fn apply(&self, v: &SparseVec<usize>) -> SparseVec<usize> {
        let mut out = SparseVec::new();
        for (j, c) in v.iter() {
            out.axpy(c, &self.cols[*j]);
        }
        out
    }

    /// `self · other`.
    pub fn compose(&self, other: &SparseMatrix) -> SparseMatrix {
        SparseMatrix { cols: other.cols.iter().map(|c| self.apply(c)).collect() }
    }

    pub fn axpy(&mut self, c: &Rational, other: &SparseMatrix) {
        for (a, b) in self.cols.iter_mut().zip(&other.cols) {
            a.axpy(c, b);
        }
    }

    pub fn scaled(&self, c: &Rational) -> SparseMatrix {
        SparseMatrix { cols: self.cols.iter().map(|v| v.scaled(c)).collect() }
    }

    pub fn commutator(&self, other: &SparseMatrix) -> SparseMatrix {
        let mut m = self.compose(other);
        m.axpy(&rat(-1), &other.compose(self));
        m
    }

    /// Frobenius inner product Σ_{ij} A_ij B_ij.
    fn frobenius(&self, other: &SparseMatrix) -> Rational {
        let mut s = Rational::zero();
        for (a, b) in self.cols.iter().zip(&other.cols) {
            for (i, x) in a.iter() {
                if let Some(y) = b.get(i) {
                    s += x * y;
                }
            }
        }
        s
    }

    /// Restriction to the coordinate subspace spanned by `keep` (which must
    /// be invariant), reindexed in the order of `keep`.
    fn restrict(&self, keep: &[usize]) -> SparseMatrix {
        let pos: BTreeMap<usize, usize> = keep.iter().enumerate().map(|(i, &s)| (s, i)).collect();
        let cols = keep
            .iter()
            .map(|&s| SparseVec::from_entries(self.cols[s].iter().map(|(r, c)| (pos[r], c.clone()))))
            .collect();
        SparseMatrix { cols }
    }
}

// Occupation space of four fermionic modes; state = bitmask of occupied modes.
const MODES: usize = 4;
const FOCK_DIM: usize = 1 << MODES;

fn jw_sign(state: usize, mode: usize) -> Rational {
    let below = (state & ((1 << mode) - 1)).count_ones();
    if below.is_multiple_of(2) {
        Rational::one()
    } else {
        -Rational::one()
    }
}

fn creation(mode: usize) -> SparseMatrix {
    let mut m = SparseMatrix::zero(FOCK_DIM);
    for s in 0..FOCK_DIM {
        if s & (1 << mode) == 0 {
            m.set(s | (1 << mode), s, jw_sign(s, mode));
        }
    }
    m
}

fn annihilation(mode: usize) -> SparseMatrix {
    let mut m = SparseMatrix::zero(FOCK_DIM);
    for s in 0..FOCK_DIM {
        if s & (1 << mode) != 0 {
            m.set(s & !(1 << mode), s, jw_sign(s, mode));
        }
    }
    m
}

/// The oscillator images of the Chevalley-type generators on the 16-dim space.
struct Oscillator {
    raise: Vec<SparseMatrix>,
    lower: Vec<SparseMatrix>,
    cartan: Vec<SparseMatrix>,
    create: Vec<SparseMatrix>,
    annihilate: Vec<SparseMatrix>,
}

impl Oscillator {
    fn new() -> Self {
        let create: Vec<SparseMatrix> = (0..MODES).map(creation).collect();
        let annihilate: Vec<SparseMatrix> = (0..MODES).map(annihilation).collect();
        let mut raise = Vec::with_capacity(NUM_POSITIVE);
        let mut lower = Vec::with_capacity(NUM_POSITIVE);
        for root in d4().positive_roots() {
            let t = root.eps.twice();
            let plus: Vec<usize> = (0..MODES).filter(|&m| t[m] > 0).collect();
            let minus: Vec<usize> = (0..MODES).filter(|&m| t[m] < 0).collect();
            match (plus.as_slice(), minus.as_slice()) {
                // ε_i − ε_j
                ([i], [j]) => {
                    raise.push(create[*i].compose(&annihilate[*j]));
                    lower.push(create[*j].compose(&annihilate[*i]));
                }
                // ε_i + ε_j, i < j
                ([i, j], []) => {
                    raise.push(create[*i].compose(&create[*j]));
                    lower.push(annihilate[*j].compose(&annihilate[*i]));
                }
                _ => unreachable!("D4 roots are ε_i ± ε_j"),
            }
        }
        let cartan = (0..MODES)
            .map(|m| {
                let mut h = create[m].compose(&annihilate[m]);
                let mut half = SparseMatrix::zero(FOCK_DIM);
                for s in 0..FOCK_DIM {
                    half.set(s, s, rat_frac(1, 2));
                }
                h.axpy(&rat(-1), &half);
                h
            })
            .collect();
        Self { raise, lower, cartan, create, annihilate }
    }

    fn fock_weight(state: usize) -> EpsWeight {
        EpsWeight::from_twice(std::array::from_fn(|m| if state & (1 << m) != 0 { 1 } else { -1 }))
    }
}

/// Coordinates of `target` in an orthogonal operator basis (w.r.t. the
/// Frobenius product); fails if `target` is not in the span.
fn decompose_operator(basis: &[SparseMatrix], norms: &[Rational], target: &SparseMatrix) -> Result<SparseVec<usize>> {
    let coeffs = SparseVec::from_entries(
        basis.iter().zip(norms).enumerate().map(|(b, (m, n))| (b, m.frobenius(target) / n)),
    );
    let mut rebuilt = SparseMatrix::zero(target.dim());
    for (b, c) in coeffs.iter() {
        rebuilt.axpy(c, &basis[*b]);
    }
    if &rebuilt != target {
        return Err(Error::Model("commutator leaves the operator span".into()));
    }
    Ok(coeffs)
}

/// Matrix of ad(x) on the span of `basis`.
fn adjoint_action(basis: &[SparseMatrix], x: &SparseMatrix) -> Result<SparseMatrix> {
    let norms: Vec<Rational> = basis.iter().map(|b| b.frobenius(b)).collect();
    let cols = basis
        .iter()
        .map(|b| decompose_operator(basis, &norms, &x.commutator(b)))
        .collect::<Result<Vec<_>>>()?;
    Ok(SparseMatrix { cols })
}

/// An explicit finite-dimensional representation: basis states with
/// weights and exact matrices for every e_{±α_i} and h_{ε_j}.
#[derive(Clone, Debug)]
pub struct RepModel {
    /// Fundamental index 1..=4.
    pub label: usize,
    pub weights: Vec<EpsWeight>,
    /// Action of e_{−α_i}, indexed by `i - 1`.
    pub lower: Vec<SparseMatrix>,
    /// Action of e_{α_i}, indexed by `i - 1`.
    pub raise: Vec<SparseMatrix>,
    /// Action of h_{ε_j}, indexed by `j - 1`.
    pub cartan: Vec<SparseMatrix>,
    /// Basis index of the highest weight state.
    pub highest: usize,
}

impl RepModel {
    pub fn dim(&self) -> usize {
        self.weights.len()
    }

    /// Same model with e_{−α_i} replaced by `c_i · e_{−α_i}`.
    pub fn rescaled(&self, factors: &[Rational; NUM_POSITIVE]) -> RepModel {
        let mut m = self.clone();
        for (l, c) in m.lower.iter_mut().zip(factors) {
            *l = l.scaled(c);
        }
        m
    }

    fn check(self) -> Result<Self> {
        let data = d4();
        let dim = self.dim();
        let fail = |msg: String| Err(Error::Model(format!("ω{}: {msg}", self.label)));
        for (i, (lo, hi)) in self.lower.iter().zip(&self.raise).enumerate() {
            let alpha = data.root(i + 1);
            for b in 0..dim {
                let mu = self.weights[b];
                if lo.col(b).keys().any(|&t| self.weights[t] != mu - alpha) {
                    return fail(format!("e_-α{} breaks the weight grading", i + 1));
                }
                if hi.col(b).keys().any(|&t| self.weights[t] != mu + alpha) {
                    return fail(format!("e_α{} breaks the weight grading", i + 1));
                }
            }
            let h = hi.commutator(lo);
            for b in 0..dim {
                let expect = SparseVec::from_entries([(b, pairing(&self.weights[b], &alpha))]);
                if h.col(b) != &expect {
                    return fail(format!("[e_α{0}, e_-α{0}] is not the coroot", i + 1));
                }
            }
        }
        for (j, h) in self.cartan.iter().enumerate() {
            for b in 0..dim {
                let expect = SparseVec::from_entries([(b, self.weights[b].coords()[j].clone())]);
                if h.col(b) != &expect {
                    return fail(format!("h_ε{} is not diagonal with the basis weights", j + 1));
                }
            }
        }
        // Highest vectors: kernel of the stacked raising operators.
        let mut acc = RankAccumulator::<usize>::new();
        for hi in &self.raise {
            let mut rows: BTreeMap<usize, SparseVec<usize>> = BTreeMap::new();
            for b in 0..dim {
                for (r, c) in hi.col(b).iter() {
                    rows.entry(*r).or_default().add_at(b, c);
                }
            }
            for row in rows.values() {
                acc.insert(row);
            }
        }
        if dim - acc.rank() != 1 {
            return fail(format!("{} independent highest vectors, expected 1", dim - acc.rank()));
        }
        if self.raise.iter().any(|hi| !hi.col(self.highest).is_zero()) {
            return fail("the designated highest state is not annihilated by the raising operators".into());
        }
        if self.weights[self.highest] != data.fundamental_weight(self.label) {
            return fail(format!("highest weight {} is not ω{}", self.weights[self.highest], self.label));
        }
        Ok(self)
    }
}

/// Builds the model of V(ω_i), `i` in 1..=4.
pub fn fundamental_model(i: usize) -> Result<RepModel> {
    let osc = Oscillator::new();
    let model = match i {
        3 | 4 => {
            let parity = if i == 4 { 0 } else { 1 };
            let keep: Vec<usize> = (0..FOCK_DIM).filter(|s| s.count_ones() % 2 == parity).collect();
            let weights: Vec<EpsWeight> = keep.iter().map(|&s| Oscillator::fock_weight(s)).collect();
            let top = d4().fundamental_weight(i);
            let highest = weights.iter().position(|w| *w == top).expect("spinor highest weight");
            RepModel {
                label: i,
                lower: osc.lower.iter().map(|m| m.restrict(&keep)).collect(),
                raise: osc.raise.iter().map(|m| m.restrict(&keep)).collect(),
                cartan: osc.cartan.iter().map(|m| m.restrict(&keep)).collect(),
                weights,
                highest,
            }
        }
        1 => {
            // a_1†..a_4† carry ε_1..ε_4, a_4..a_1 carry −ε_4..−ε_1.
            let mut basis: Vec<SparseMatrix> = osc.create.clone();
            basis.extend(osc.annihilate.iter().rev().cloned());
            let weights: Vec<EpsWeight> = (0..MODES)
                .map(EpsWeight::eps)
                .chain((0..MODES).rev().map(|m| -EpsWeight::eps(m)))
                .collect();
            operator_model(1, &osc, basis, weights, 0)?
        }
        2 => {
            // Positive root vectors, the Cartan generators, negative root vectors.
            let mut basis: Vec<SparseMatrix> = osc.raise.clone();
            basis.extend(osc.cartan.iter().cloned());
            basis.extend(osc.lower.iter().rev().cloned());
            let roots = d4().positive_roots();
            let weights: Vec<EpsWeight> = roots
                .iter()
                .map(|r| r.eps)
                .chain(std::iter::repeat_n(EpsWeight::ZERO, RANK))
                .chain(roots.iter().rev().map(|r| -r.eps))
                .collect();
            operator_model(2, &osc, basis, weights, 0)?
        }
        _ => return Err(Error::Model(format!("no fundamental weight ω{i}"))),
    };
    model.check()
}

fn operator_model(
    label: usize,
    osc: &Oscillator,
    basis: Vec<SparseMatrix>,
    weights: Vec<EpsWeight>,
    highest: usize,
) -> Result<RepModel> {
    let act = |ops: &[SparseMatrix]| ops.iter().map(|x| adjoint_action(&basis, x)).collect::<Result<Vec<_>>>();
    Ok(RepModel {
        label,
        lower: act(&osc.lower)?,
        raise: act(&osc.raise)?,
        cartan: act(&osc.cartan)?,
        weights,
        highest,
    })
}

/// The four fundamental models, shared by every tensor computation.
#[derive(Clone, Debug)]
pub struct Models {
    fundamental: [RepModel; RANK],
}

impl Models {
    pub fn new() -> Result<Self> {
        Ok(Self {
            fundamental: [fundamental_model(1)?, fundamental_model(2)?, fundamental_model(3)?, fundamental_model(4)?],
        })
    }

    /// The shared default models.
    pub fn standard() -> &'static Models {
        static MODELS: std::sync::OnceLock<Models> = std::sync::OnceLock::new();
        MODELS.get_or_init(|| Models::new().expect("fundamental models satisfy their invariants"))
    }

    pub fn model(&self, i: usize) -> &RepModel {
        &self.fundamental[i - 1]
    }

    /// Every lowering operator e_{−α_i} multiplied by `factors[i-1]` in all models.
    pub fn rescaled(&self, factors: &[Rational; NUM_POSITIVE]) -> Models {
        Models { fundamental: std::array::from_fn(|i| self.fundamental[i].rescaled(factors)) }
    }

    /// Slot labels of the tensor product hosting V(λ): k_1 copies of ω_1,
    /// then k_2 of ω_2, k_3 of ω_3, k_4 of ω_4.
    pub fn ambient(lambda: &DomWeight) -> Vec<u8> {
        let mut slots = Vec::new();
        for (i, &k) in lambda.k.iter().enumerate() {
            slots.extend(std::iter::repeat_n(i as u8 + 1, k as usize));
        }
        slots
    }

    /// Dimension of the ambient tensor product, saturating.
    pub fn ambient_dim(&self, lambda: &DomWeight) -> u128 {
        Self::ambient(lambda)
            .iter()
            .fold(1u128, |acc, &l| acc.saturating_mul(self.model(l as usize).dim() as u128))
    }

    /// All distinct weights occurring in the ambient tensor product.
    pub fn ambient_weights(&self, lambda: &DomWeight) -> Vec<EpsWeight> {
        let mut set = std::collections::BTreeSet::from([EpsWeight::ZERO]);
        for l in Self::ambient(lambda) {
            let m = self.model(l as usize);
            let factor: std::collections::BTreeSet<EpsWeight> = m.weights.iter().copied().collect();
            set = set.iter().flat_map(|a| factor.iter().map(move |b| *a + *b)).collect();
        }
        set.into_iter().collect()
    }

    pub fn highest_vector(&self, lambda: &DomWeight) -> TensorVector {
        let slots = Self::ambient(lambda);
        let key: Vec<u8> = slots.iter().map(|&l| self.model(l as usize).highest as u8).collect();
        TensorVector { slots, value: SparseVec::unit(key) }
    }

    /// Leibniz action of e_{−α_i} on a tensor.
    pub fn apply_lowering(&self, v: &TensorVector, root_index: usize) -> TensorVector {
        let mut out = SparseVec::new();
        let mats: Vec<&SparseMatrix> = v.slots.iter().map(|&l| &self.model(l as usize).lower[root_index - 1]).collect();
        for (key, c) in v.value.iter() {
            for (slot, m) in mats.iter().enumerate() {
                for (t, x) in m.col(key[slot] as usize).iter() {
                    let mut k = key.clone();
                    k[slot] = *t as u8;
                    out.add_at(k, &(c * x));
                }
            }
        }
        TensorVector { slots: v.slots.clone(), value: out }
    }

    /// Leibniz action of e_{α_i}.
    pub fn apply_raising(&self, v: &TensorVector, root_index: usize) -> TensorVector {
        let mut out = SparseVec::new();
        let mats: Vec<&SparseMatrix> = v.slots.iter().map(|&l| &self.model(l as usize).raise[root_index - 1]).collect();
        for (key, c) in v.value.iter() {
            for (slot, m) in mats.iter().enumerate() {
                for (t, x) in m.col(key[slot] as usize).iter() {
                    let mut k = key.clone();
                    k[slot] = *t as u8;
                    out.add_at(k, &(c * x));
                }
            }
        }
        TensorVector { slots: v.slots.clone(), value: out }
    }

    /// v(σ) = e_{−α_1}^{p_1} ⋯ e_{−α_12}^{p_12} v_λ; the rightmost factor acts first.
    pub fn signature_vector(&self, sigma: &Signature) -> TensorVector {
        self.lower_from(self.highest_vector(&sigma.hw), &sigma.p)
    }

    /// Applies e_{−α_1}^{p_1} ⋯ e_{−α_12}^{p_12} to `v`.
    pub fn lower_from(&self, mut v: TensorVector, p: &[u32; NUM_POSITIVE]) -> TensorVector {
        for i in (1..=NUM_POSITIVE).rev() {
            for _ in 0..p[i - 1] {
                if v.is_zero() {
                    return v;
                }
                v = self.apply_lowering(&v, i);
            }
        }
        v
    }

    /// Weight of a tensor basis key.
    pub fn key_weight(&self, slots: &[u8], key: &[u8]) -> EpsWeight {
        slots
            .iter()
            .zip(key)
            .fold(EpsWeight::ZERO, |acc, (&l, &s)| acc + self.model(l as usize).weights[s as usize])
    }
}

/// A vector in a tensor product of fundamental models, keyed by one basis
/// state per slot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorVector {
    pub slots: Vec<u8>,
    pub value: SparseVec<Vec<u8>>,
}

impl TensorVector {
    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    /// The common weight of all keys, if the vector is nonzero and homogeneous.
    pub fn weight(&self, models: &Models) -> Option<EpsWeight> {
        let mut ws = self.value.keys().map(|k| models.key_weight(&self.slots, k));
        let first = ws.next()?;
        ws.all(|w| w == first).then_some(first)
    }
}
