//! Acceptance gate. Runs every criterion, prints one PASS/FAIL line each,
//! and exits nonzero if any criterion fails.
//!
//! cargo test -p essig --release --test acceptance

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use essig::cone::{certify_facets, FacetNormal, compare_with_table, dual_description, fundamental_generators, member, transcribed_generators};
use essig::dd::facets_of_cone;
use essig::lattice::{count_points, decompose, enumerate_points, verify_dimension_sweep, PointSampler};
use essig::linalg::{rat_frac, RankAccumulator, SparseVec};
use essig::models::Models;
use essig::roots::weyl_dim;
use essig::signatures::{essential_signatures, is_essential, DEFAULT_AMBIENT_LIMIT};
use essig::tables::fundamental_table;
use essig::{DomWeight, Signature};

use common::*;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn fundamental_tables() -> Outcome {
    let models = Models::standard();
    let mut sizes = Vec::new();
    for i in 1..=4 {
        let got: BTreeSet<[u32; 12]> = essential_signatures(models, &DomWeight::fundamental(i), DEFAULT_AMBIENT_LIMIT)
            .map_err(|e| e.to_string())?
            .iter()
            .map(|s| s.p)
            .collect();
        let want: BTreeSet<[u32; 12]> = fundamental_table(i).iter().copied().collect();
        ensure(got == want, || {
            format!("ω{i}: extra {:?}, missing {:?}", got.difference(&want).collect::<Vec<_>>(), want.difference(&got).collect::<Vec<_>>())
        })?;
        ensure(want.len() == fundamental_table(i).len(), || format!("ω{i}: duplicate table rows"))?;
        sizes.push(got.len().to_string());
    }
    ensure(sizes == ["8", "28", "8", "8"], || format!("sizes {sizes:?}"))?;
    fundamental_generators(models).map_err(|e| e.to_string())?;
    Ok(format!("{} rows, bit-exact", sizes.join("/")))
}

fn facet_reproduction() -> Outcome {
    let rays = fundamental_generators(Models::standard()).map_err(|e| e.to_string())?;
    ensure(rays.len() == 52, || format!("{} generators", rays.len()))?;
    let dual = dual_description(&rays).map_err(|e| e.to_string())?;
    ensure(dual.span_dim == 16 && dual.equalities.is_empty(), || format!("span {}", dual.span_dim))?;
    ensure(dual.facets.iter().all(|f| f.is_primitive()), || "non-primitive facet".into())?;
    let cmp = compare_with_table(&rays, &dual.facets);
    ensure(cmp.is_match(), || format!("extra {:?}\nmissing {:?}", cmp.extra, cmp.missing))?;
    let report = certify_facets(&rays, &dual.facets);
    ensure(report.all_certified(), || format!("uncertified {:?}", report.failures()))?;
    // Independent validity check on the transcription itself.
    for g in transcribed_generators() {
        ensure(member(&g.signature()), || format!("generator {} violates the table", g.signature()))?;
    }
    // Coefficient shape of the non-coordinate facets.
    for f in dual.facets.iter().filter(|f| !f.is_coordinate()) {
        ensure(f.a.iter().chain(&f.b).all(|c| (0..=3).contains(c)), || format!("coefficients of {f}"))?;
    }
    let k_candidates: Vec<FacetNormal> = (1..=4).map(FacetNormal::k_nonnegative).collect();
    let k_ranks: Vec<usize> = certify_facets(&rays, &k_candidates).facets.iter().map(|c| c.tight_rank).collect();
    let k = cmp.k_facets.iter().filter(|&&x| x).count();
    Ok(format!(
        "{} facets, coefficients in 0..=3, all certified; {} k_i ≥ 0 facets (tight ranks {:?})",
        dual.facets.len(),
        k,
        k_ranks
    ))
}

fn dimension_check() -> Outcome {
    let report = verify_dimension_sweep(3, u64::MAX, 4);
    ensure(report.rows.len() == 35, || format!("{} weights", report.rows.len()))?;
    ensure(report.checked() == 35 && report.skipped() == 0, || "rows skipped".into())?;
    ensure(report.all_equal(), || format!("mismatches {:?}", report.mismatches()))?;
    for row in &report.rows {
        let oracle = weyl_dim_oracle(row.lambda.k);
        ensure(row.count == Some(oracle as u64), || format!("{}: count {:?} vs oracle {oracle}", row.lambda, row.count))?;
    }
    for k in [[1, 1, 1, 1], [0, 2, 0, 0]] {
        let l = DomWeight::new(k);
        let c = count_points(&l);
        ensure(c == weyl_dim(&l) && c == BigUint::from(weyl_dim_oracle(k)), || format!("{l}: {c}"))?;
    }
    // Budget honesty on a larger grid.
    let budget = 10_000;
    let big = verify_dimension_sweep(6, budget, 4);
    let honest = big.rows.iter().all(|r| {
        let over = weyl_dim_oracle(r.lambda.k) > u128::from(budget);
        over == r.skipped_reason.is_some() && over == r.count.is_none()
    });
    ensure(honest && big.skipped() > 0 && big.all_equal(), || "budget handling".into())?;
    Ok(format!(
        "35 weights + 2 spot checks equal; Σk≤6 at budget {budget}: {} checked, {} skipped",
        big.checked(),
        big.skipped()
    ))
}

fn check_decomposition(s: &Signature, gens: &BTreeSet<[i64; 16]>) -> Result<(), String> {
    let parts = decompose(s).map_err(|e| format!("{s}: {e}"))?;
    let mut sum = [0i64; 16];
    for g in &parts {
        ensure(gens.contains(&g.v), || format!("{s}: part {:?} is not a generator", g.v))?;
        for (a, b) in sum.iter_mut().zip(g.v) {
            *a += b;
        }
    }
    ensure(sum == s.as_vector(), || format!("{s}: parts sum to {sum:?}"))?;
    ensure(parts.len() as u32 == s.hw.total(), || format!("{s}: {} parts", parts.len()))
}

fn decomposition_check() -> Outcome {
    let gens: BTreeSet<[i64; 16]> = transcribed_generators().iter().map(|g| g.v).collect();
    let mut exhaustive = 0;
    for l in DomWeight::up_to_total(3) {
        for s in enumerate_points(&l) {
            check_decomposition(&s, &gens)?;
            exhaustive += 1;
        }
    }
    let sampler = PointSampler::new(6);
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for s in sampler.sample_many(1000, &mut rng) {
        ensure(member(&s), || format!("sample {s} outside the cone"))?;
        check_decomposition(&s, &gens)?;
    }
    Ok(format!("{exhaustive} points with Σk≤3 and 1000 samples from {} points with Σk≤6", sampler.total()))
}

fn cross_validation() -> Outcome {
    let models = Models::standard();
    let weights = [
        [0, 0, 0, 0],
        [1, 0, 0, 0],
        [0, 1, 0, 0],
        [0, 0, 1, 0],
        [0, 0, 0, 1],
        [2, 0, 0, 0],
        [1, 0, 1, 0],
        [0, 0, 1, 1],
    ];
    let mut sizes = Vec::new();
    for k in weights {
        let l = DomWeight::new(k);
        let ess: BTreeSet<Signature> =
            essential_signatures(models, &l, DEFAULT_AMBIENT_LIMIT).map_err(|e| e.to_string())?.into_iter().collect();
        let pts: BTreeSet<Signature> = enumerate_points(&l).into_iter().collect();
        ensure(ess == pts, || {
            format!("{l}: essential-only {:?}, cone-only {:?}", ess.difference(&pts).collect::<Vec<_>>(), pts.difference(&ess).collect::<Vec<_>>())
        })?;
        ensure(ess.len() as u128 == weyl_dim_oracle(k), || format!("{l}: {} vs dim", ess.len()))?;
        sizes.push(format!("{l}:{}", ess.len()));
    }
    Ok(sizes.join(" "))
}

fn random_factors(rng: &mut ChaCha8Rng) -> [essig::linalg::Rational; 12] {
    std::array::from_fn(|_| {
        let n = rng.gen_range(1..=7) * if rng.gen_bool(0.5) { 1 } else { -1 };
        rat_frac(n, rng.gen_range(1..=5))
    })
}

fn property_suites() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let models = Models::standard();

    // Rescaling invariance.
    for t in 0..5 {
        let scaled = models.rescaled(&random_factors(&mut rng));
        for i in 1..=4 {
            let l = DomWeight::fundamental(i);
            let a = essential_signatures(models, &l, DEFAULT_AMBIENT_LIMIT).map_err(|e| e.to_string())?;
            let b = essential_signatures(&scaled, &l, DEFAULT_AMBIENT_LIMIT).map_err(|e| e.to_string())?;
            ensure(a == b, || format!("rescaling {t} changes ω{i}"))?;
        }
    }

    // Semigroup closure on sampled pairs.
    let pool: Vec<Signature> = [1, 3, 4]
        .into_iter()
        .flat_map(|i| essential_signatures(models, &DomWeight::fundamental(i), DEFAULT_AMBIENT_LIMIT).unwrap())
        .collect();
    let mut pairs = 0;
    for _ in 0..40 {
        let s = pool[rng.gen_range(0..pool.len())];
        let t = pool[rng.gen_range(0..pool.len())];
        let sum = s + t;
        ensure(is_essential(models, &sum, DEFAULT_AMBIENT_LIMIT).map_err(|e| e.to_string())?, || format!("{s} + {t} not essential"))?;
        pairs += 1;
    }

    // Double description against the subset oracle, and its involution.
    for case in 0..20 {
        let d = 2 + case % 4;
        let rays = random_cone(&mut rng, d);
        let desc = facets_of_cone(&to_big(&rays));
        let facets = from_big(&desc.facets);
        let oracle = brute_force_facets(&rays);
        ensure(facets == oracle, || format!("case {case}: rays {rays:?}\nDD {facets:?}\noracle {oracle:?}"))?;
        let back = from_big(&facets_of_cone(&desc.facets).facets);
        let oracle_back = brute_force_facets(&oracle.iter().cloned().collect::<Vec<_>>());
        ensure(back == oracle_back, || format!("case {case}: double dual {back:?} vs {oracle_back:?}"))?;
        let inputs: BTreeSet<Vec<i64>> = rays.iter().map(|r| primitive_i64(r)).collect();
        ensure(back.is_subset(&inputs), || format!("case {case}: extreme rays not among inputs"))?;
    }

    // Rank accumulator against Bareiss.
    for case in 0..50 {
        let rows = rng.gen_range(1..=12);
        let cols = rng.gen_range(1..=12);
        let r = rng.gen_range(0..=rows.min(cols));
        let m = low_rank_matrix(&mut rng, rows, cols, r);
        let mut acc = RankAccumulator::new();
        let mut order: Vec<usize> = (0..rows).collect();
        for i in (1..rows).rev() {
            order.swap(i, rng.gen_range(0..=i));
        }
        for &i in &order {
            acc.insert(&SparseVec::from_entries(m[i].iter().enumerate().map(|(j, &x)| (j, rat_frac(x, 1)))));
        }
        ensure(acc.rank() == bareiss_rank(&m), || format!("case {case}: rank {} vs {}", acc.rank(), bareiss_rank(&m)))?;
    }
    Ok(format!("5 rescalings, {pairs} semigroup pairs, 20 DD cones, 50 rank matrices"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 6] = [
        ("fundamental table reproduction", fundamental_tables),
        ("facet reproduction", facet_reproduction),
        ("dimension equality at desk scale", dimension_check),
        ("decomposition at desk scale", decomposition_check),
        ("essential set equals cone points", cross_validation),
        ("property suites", property_suites),
    ];
    let mut failed = Vec::new();
    for (n, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS [{}] {name}: {detail} ({secs:.2}s)", n + 1),
            Err(why) => {
                println!("FAIL [{}] {name}: {why} ({secs:.2}s)", n + 1);
                failed.push(n + 1);
            }
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
