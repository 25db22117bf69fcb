//! Independent oracles shared by the integration tests. Nothing here calls
//! into the library's linear algebra.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use rand::Rng;

/// Rank by fraction-free Bareiss elimination.
pub fn bareiss_rank(rows: &[Vec<i64>]) -> usize {
    let mut m: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    let ncols = m.first().map_or(0, Vec::len);
    let mut prev = BigInt::from(1);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(piv) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else { continue };
        m.swap(rank, piv);
        for r in rank + 1..m.len() {
            for c in col + 1..ncols {
                let v = &m[rank][col] * &m[r][c] - &m[r][col] * &m[rank][c];
                m[r][c] = v / &prev;
            }
            m[r][col] = BigInt::zero();
        }
        prev = m[rank][col].clone();
        rank += 1;
    }
    rank
}

/// Random integer matrix of prescribed rank at most `rank` (product of two
/// random factors), entries of moderate size.
pub fn low_rank_matrix<R: Rng>(rng: &mut R, rows: usize, cols: usize, rank: usize) -> Vec<Vec<i64>> {
    let a: Vec<Vec<i64>> = (0..rows).map(|_| (0..rank).map(|_| rng.gen_range(-3..=3)).collect()).collect();
    let b: Vec<Vec<i64>> = (0..rank).map(|_| (0..cols).map(|_| rng.gen_range(-3..=3)).collect()).collect();
    (0..rows)
        .map(|i| (0..cols).map(|j| (0..rank).map(|t| a[i][t] * b[t][j]).sum()).collect())
        .collect()
}

const POS_ROOTS: [[i64; 4]; 12] = [
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

/// Doubled ε-coordinates of ω_1..ω_4.
const OMEGA2X: [[i64; 4]; 4] = [[2, 0, 0, 0], [2, 2, 0, 0], [1, 1, 1, -1], [1, 1, 1, 1]];

/// dim V(λ) from the product formula, in plain integers.
pub fn weyl_dim_oracle(k: [u32; 4]) -> u128 {
    let mut lam2 = [0i64; 4];
    let mut rho2 = [0i64; 4];
    for i in 0..4 {
        for j in 0..4 {
            lam2[j] += i64::from(k[i]) * OMEGA2X[i][j];
            rho2[j] += OMEGA2X[i][j];
        }
    }
    let dot = |x: &[i64; 4], a: &[i64; 4]| x.iter().zip(a).map(|(p, q)| p * q).sum::<i64>();
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for a in &POS_ROOTS {
        let s: [i64; 4] = std::array::from_fn(|j| lam2[j] + rho2[j]);
        num *= dot(&s, a) as u128;
        den *= dot(&rho2, a) as u128;
    }
    assert_eq!(num % den, 0);
    num / den
}

fn det(m: &[Vec<i128>]) -> i128 {
    let n = m.len();
    if n == 0 {
        return 1;
    }
    if n == 1 {
        return m[0][0];
    }
    (0..n)
        .map(|c| {
            let minor: Vec<Vec<i128>> =
                m[1..].iter().map(|r| r.iter().enumerate().filter(|(j, _)| *j != c).map(|(_, x)| *x).collect()).collect();
            let s = if c % 2 == 0 { 1 } else { -1 };
            s * m[0][c] * det(&minor)
        })
        .sum()
}

/// Generalized cross product of d−1 vectors in dimension d.
fn cofactor_normal(vs: &[&Vec<i64>], d: usize) -> Vec<i128> {
    (0..d)
        .map(|j| {
            let minor: Vec<Vec<i128>> =
                vs.iter().map(|v| (0..d).filter(|&c| c != j).map(|c| i128::from(v[c])).collect()).collect();
            let s = if j % 2 == 0 { 1 } else { -1 };
            s * det(&minor)
        })
        .collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Facets of a full-dimensional cone(R) ⊂ ℤ^d: every primitive normal of a
/// hyperplane through d−1 of the rays that is nonnegative on all of them.
pub fn brute_force_facets(rays: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let d = rays[0].len();
    let mut out = BTreeSet::new();
    for s in subsets(rays.len(), d - 1) {
        let picked: Vec<&Vec<i64>> = s.iter().map(|&i| &rays[i]).collect();
        let n = cofactor_normal(&picked, d);
        if n.iter().all(|x| *x == 0) {
            continue;
        }
        let vals: Vec<i128> = rays.iter().map(|r| r.iter().zip(&n).map(|(a, b)| i128::from(*a) * b).sum()).collect();
        let sign = if vals.iter().all(|v| *v >= 0) {
            1
        } else if vals.iter().all(|v| *v <= 0) {
            -1
        } else {
            continue;
        };
        let g = n.iter().fold(0i128, |g, x| g.gcd(x));
        out.insert(n.iter().map(|x| i64::try_from(sign * x / g).unwrap()).collect());
    }
    out
}

pub fn to_big(v: &[Vec<i64>]) -> Vec<Vec<BigInt>> {
    v.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect()
}

pub fn from_big(v: &[Vec<BigInt>]) -> BTreeSet<Vec<i64>> {
    v.iter().map(|r| r.iter().map(|x| i64::try_from(x).unwrap()).collect()).collect()
}

/// Random pointed full-dimensional cone: rays with positive first coordinate.
pub fn random_cone<R: Rng>(rng: &mut R, d: usize) -> Vec<Vec<i64>> {
    loop {
        let n = rng.gen_range(d..=d + 5);
        let rays: Vec<Vec<i64>> = (0..n)
            .map(|_| (0..d).map(|j| if j == 0 { rng.gen_range(1..=3) } else { rng.gen_range(-3..=3) }).collect())
            .collect();
        if bareiss_rank(&rays) == d {
            return rays;
        }
    }
}

/// Primitive normalization of a ray, for comparing directions.
pub fn primitive_i64(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, x| g.gcd(x)).max(1);
    v.iter().map(|x| x / g).collect()
}
