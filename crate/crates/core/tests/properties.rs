mod common;

use std::cmp::Ordering;

use proptest::prelude::*;

use essig::cone::{member, transcribed_generators, FacetNormal};
use essig::dd::facets_of_cone;
use essig::lattice::{decompose, enumerate_points};
use essig::linalg::{rat, RankAccumulator, SparseVec};
use essig::roots::{d4, signature_weight, weyl_dim};
use essig::{DomWeight, Signature};

use common::*;

fn small_weight(max: u32) -> impl Strategy<Value = DomWeight> {
    prop::array::uniform4(0..=max).prop_map(DomWeight::new)
}

fn signature() -> impl Strategy<Value = Signature> {
    (small_weight(3), prop::array::uniform12(0u32..4)).prop_map(|(hw, p)| Signature::new(hw, p))
}

fn cone_point() -> impl Strategy<Value = Signature> {
    (small_weight(1), any::<prop::sample::Index>()).prop_filter_map("empty", |(l, i)| {
        let pts = enumerate_points(&l);
        (!pts.is_empty()).then(|| pts[i.index(pts.len())])
    })
}

fn matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..10, 1usize..10).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-2i64..=2, c), r))
}

fn sparse(row: &[i64]) -> SparseVec<usize> {
    SparseVec::from_entries(row.iter().enumerate().map(|(j, &x)| (j, rat(x))))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_matches_bareiss(m in matrix()) {
        let mut acc = RankAccumulator::new();
        for row in &m {
            acc.insert(&sparse(row));
        }
        prop_assert_eq!(acc.rank(), bareiss_rank(&m));
        for row in &m {
            prop_assert!(acc.contains(&sparse(row)));
        }
    }

    #[test]
    fn rank_is_insertion_order_independent(m in matrix(), seed in any::<u64>()) {
        let mut order: Vec<usize> = (0..m.len()).collect();
        let mut s = seed;
        for i in (1..order.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let mut a = RankAccumulator::new();
        let mut b = RankAccumulator::new();
        for row in &m {
            a.insert(&sparse(row));
        }
        for &i in &order {
            b.insert(&sparse(&m[i]));
        }
        prop_assert_eq!(a.rank(), b.rank());
        // Fully reduced echelon rows are unique.
        let ra: Vec<_> = a.rows().cloned().collect();
        let rb: Vec<_> = b.rows().cloned().collect();
        prop_assert_eq!(ra, rb);
    }

    #[test]
    fn signature_weight_is_additive(s in signature(), t in signature()) {
        prop_assert_eq!(signature_weight(&(s + t)), signature_weight(&s) + signature_weight(&t));
    }

    #[test]
    fn order_is_total_and_antisymmetric(s in signature(), t in signature()) {
        let t = Signature::new(s.hw, t.p);
        let st = s.compare(&t).unwrap();
        prop_assert_eq!(st.reverse(), t.compare(&s).unwrap());
        prop_assert_eq!(st == Ordering::Equal, s == t);
    }

    #[test]
    fn order_is_compatible_with_addition(s in signature(), t in signature(), u in signature()) {
        let t = Signature::new(s.hw, t.p);
        prop_assert_eq!(s.compare(&t).unwrap(), (s + u).compare(&(t + u)).unwrap());
    }

    #[test]
    fn membership_is_closed_under_addition(s in cone_point(), t in cone_point()) {
        prop_assert!(member(&s) && member(&t));
        prop_assert!(member(&(s + t)));
    }

    #[test]
    fn decomposition_is_sound(s in cone_point(), t in cone_point()) {
        let sum = s + t;
        let parts = decompose(&sum).unwrap();
        let gens = transcribed_generators();
        let mut acc = [0i64; 16];
        for g in &parts {
            prop_assert!(gens.contains(g));
            for (a, b) in acc.iter_mut().zip(g.v) {
                *a += b;
            }
        }
        prop_assert_eq!(acc, sum.as_vector());
    }

    #[test]
    fn weyl_dimension_matches_oracle(l in small_weight(6)) {
        let d = weyl_dim(&l);
        prop_assert_eq!(d.to_string(), weyl_dim_oracle(l.k).to_string());
    }

    #[test]
    fn weyl_dimension_has_triality(l in small_weight(5)) {
        let [a, b, c, d] = l.k;
        let base = weyl_dim(&l);
        prop_assert_eq!(&base, &weyl_dim(&DomWeight::new([c, b, d, a])));
        prop_assert_eq!(&base, &weyl_dim(&DomWeight::new([a, b, d, c])));
    }

    #[test]
    fn facet_normals_round_trip(a in prop::array::uniform12(0i64..4), b in prop::array::uniform4(0i64..4)) {
        let f = FacetNormal::from_normal(&FacetNormal { a, b }.normal());
        prop_assert!(f.is_primitive() || (a == [0; 12] && b == [0; 4]));
        prop_assert_eq!(FacetNormal::from_normal(&f.normal()), f);
    }

    #[test]
    fn dd_matches_subset_oracle(seed in any::<u64>(), d in 2usize..=4) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let rays = random_cone(&mut rng, d);
        let desc = facets_of_cone(&to_big(&rays));
        prop_assert_eq!(from_big(&desc.facets), brute_force_facets(&rays));
        prop_assert_eq!(desc.span_dim, d);
    }
}

#[test]
fn fundamental_weights_are_dual_to_simple_roots() {
    let data = d4();
    for i in 1..=4 {
        for j in 1..=4 {
            let p = essig::roots::pairing(&data.fundamental_weight(i), &data.simple_root(j));
            assert_eq!(p, rat(i64::from(i == j)));
        }
    }
}
