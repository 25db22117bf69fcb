use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use anyhow::{bail, Result};
use serde_json::{json, Value};

use essig::cone::{certify_facets, compare_with_table, transcribed_generators, FacetNormal};
use essig::lattice::{count_points_u64, decompose_with, verify_dimension_sweep};
use essig::models::Models;
use essig::roots::{positive_roots, weyl_dim, NUM_POSITIVE};
use essig::signatures::essential_signatures;
use essig::tables::fundamental_table;
use essig::{DomWeight, Error, Signature};

use crate::args::{Cli, Command};
use crate::cache::{load_or_compute, Lookup};
use crate::output::{FacetRecord, Report, SignatureRecord, Status, SweepRecord, FACET_HEADER, SIGNATURE_HEADER, SWEEP_HEADER};

/// A resource guard refused the request.
#[derive(Debug)]
pub struct GuardExceeded(pub String);

impl fmt::Display for GuardExceeded {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for GuardExceeded {}

/// Exit code for an error that produced no report.
pub fn exit_code(e: &anyhow::Error) -> u8 {
    if e.downcast_ref::<GuardExceeded>().is_some() {
        return Status::Guard as u8;
    }
    match e.downcast_ref::<Error>() {
        Some(Error::AmbientTooLarge { .. }) => Status::Guard as u8,
        Some(Error::TableMismatch(_) | Error::DimensionMismatch { .. }) => Status::Mismatch as u8,
        Some(Error::Decomposition(_)) => Status::Counterexample as u8,
        _ => 1,
    }
}

pub fn run(cli: &Cli, cache_dir: &Path) -> Result<Report> {
    match &cli.command {
        Command::Roots => Ok(roots()),
        Command::Essential { weight, check_tables, ambient_limit } => essential(*weight, *check_tables, *ambient_limit),
        Command::Cone { compare } => cone(*compare, cache_dir),
        Command::Count { weight, point_budget } => count(*weight, *point_budget),
        Command::Dim { weight } => Ok(dim(*weight)),
        Command::Decompose { weight, p, exclude } => decompose(*weight, *p, exclude),
        Command::Verify { max_total, point_budget, jobs, no_timing } => {
            Ok(verify(*max_total, *point_budget, *jobs, *no_timing))
        }
    }
}

fn params(entries: &[(&str, Value)]) -> BTreeMap<String, Value> {
    entries.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn header(h: &[&str]) -> Vec<String> {
    h.iter().map(|s| s.to_string()).collect()
}

fn roots() -> Report {
    let rows: Vec<Value> = positive_roots()
        .iter()
        .map(|r| {
            let eps: Vec<i64> = r.eps.twice().iter().map(|x| x / 2).collect();
            json!({ "index": r.index, "expression": r.expression(), "eps": eps })
        })
        .collect();
    let mut rep = Report::new("roots", BTreeMap::new(), Value::Array(rows));
    rep.text = positive_roots().iter().map(|r| format!("{}: {}\n", r.index, r.expression())).collect();
    rep.csv_header = header(&["index", "eps1", "eps2", "eps3", "eps4"]);
    rep.csv = positive_roots()
        .iter()
        .map(|r| std::iter::once(r.index.to_string()).chain(r.eps.twice().iter().map(|x| (x / 2).to_string())).collect())
        .collect();
    rep
}

fn signature_rows(sigs: &[Signature]) -> Vec<Vec<String>> {
    sigs.iter().map(|s| SignatureRecord::from(s).csv_fields()).collect()
}

fn essential(weight: [u32; 4], check_tables: bool, limit: u128) -> Result<Report> {
    let lambda = DomWeight::new(weight);
    let sigs = essential_signatures(Models::standard(), &lambda, limit)?;
    let fundamental = (lambda.total() == 1).then(|| weight.iter().position(|&k| k == 1).unwrap() + 1);

    let mut status = Status::Success;
    let mut check = Value::Null;
    let mut check_text = String::new();
    if check_tables {
        match fundamental {
            Some(i) => {
                let got: Vec<[u32; NUM_POSITIVE]> = sigs.iter().map(|s| s.p).collect();
                let want = fundamental_table(i);
                let extra: Vec<_> = got.iter().filter(|p| !want.contains(p)).collect();
                let missing: Vec<_> = want.iter().filter(|p| !got.contains(p)).collect();
                let matches = extra.is_empty() && missing.is_empty();
                if matches {
                    check_text = format!("table check: MATCH ({} rows)\n", want.len());
                } else {
                    status = Status::Mismatch;
                    check_text = "table check: MISMATCH\n".into();
                    for p in &extra {
                        check_text += &format!("+ {p:?}\n");
                    }
                    for p in &missing {
                        check_text += &format!("- {p:?}\n");
                    }
                }
                check = json!({ "matches": matches, "extra": extra, "missing": missing });
            }
            None => check_text = "table check: no transcribed table for this weight\n".into(),
        }
    }

    let records: Vec<SignatureRecord> = sigs.iter().map(SignatureRecord::from).collect();
    let mut rep = Report::new(
        "essential",
        params(&[("weight", json!(weight)), ("check_tables", json!(check_tables)), ("ambient_limit", json!(limit.to_string()))]),
        json!({ "weight": weight, "count": sigs.len(), "signatures": records, "table_check": check }),
    );
    rep.text = sigs.iter().map(|s| format!("{s}\n")).collect::<String>() + &check_text;
    rep.csv_header = header(&SIGNATURE_HEADER);
    rep.csv = signature_rows(&sigs);
    rep.status = status;
    Ok(rep)
}

fn facet_rows(facets: &[FacetNormal]) -> Vec<Vec<String>> {
    facets.iter().map(|f| f.a.iter().chain(&f.b).map(i64::to_string).collect()).collect()
}

fn cone(compare: bool, cache_dir: &Path) -> Result<Report> {
    let lookup = load_or_compute(cache_dir)?;
    if let Lookup::Hit(_) = lookup {
        eprintln!("essig: using cached cone in {}", cache_dir.display());
    }
    let cache = lookup.into_inner();
    let facets: Vec<FacetNormal> = cache.facets.iter().map(FacetRecord::facet).collect();
    let records: Vec<FacetRecord> = facets.iter().map(FacetRecord::from).collect();

    let mut status = Status::Success;
    let mut comparison = Value::Null;
    let mut text = String::new();
    if compare {
        let rays = cache.rays();
        let cmp = compare_with_table(&rays, &facets);
        let cert = certify_facets(&rays, &facets);
        let certified = cert.facets.iter().filter(|f| f.certified).count();
        let ok = cmp.is_match() && cert.all_certified();
        if !ok {
            status = Status::Mismatch;
        }
        let k_count = cmp.k_facets.iter().filter(|&&x| x).count();
        text += &format!(
            "{} {} facets ({} transcribed + {} p_j >= 0 + {} k_i >= 0 expected), {}/{} certified\n",
            if ok { "MATCH" } else { "MISMATCH" },
            facets.len(),
            essig::tables::CONE_INEQUALITIES.len(),
            NUM_POSITIVE,
            k_count,
            certified,
            facets.len()
        );
        for f in &cmp.extra {
            text += &format!("+ {f}\n");
        }
        for f in &cmp.missing {
            text += &format!("- {f}\n");
        }
        let uncertified: Vec<FacetRecord> = facets
            .iter()
            .zip(&cert.facets)
            .filter(|(_, c)| !c.certified)
            .map(|(f, _)| FacetRecord::from(f))
            .collect();
        for u in &uncertified {
            text += &format!("uncertified: {}\n", u.facet());
        }
        comparison = json!({
            "matches": cmp.is_match(),
            "extra": cmp.extra.iter().map(FacetRecord::from).collect::<Vec<_>>(),
            "missing": cmp.missing.iter().map(FacetRecord::from).collect::<Vec<_>>(),
            "k_facets": cmp.k_facets,
            "certified": certified,
            "uncertified": uncertified,
            "rays_off_all_facets": cert.rays_off_all_facets,
        });
    } else {
        text = facets.iter().map(|f| format!("{f}\n")).collect();
    }
    let mut rep = Report::new(
        "cone",
        params(&[("compare", json!(compare))]),
        json!({
            "generator_hash": cache.generator_hash,
            "generators": cache.generators.len(),
            "span_dim": cache.span_dim,
            "facet_count": facets.len(),
            "facets": records,
            "comparison": comparison,
        }),
    );
    rep.text = text;
    rep.csv_header = header(&FACET_HEADER);
    rep.csv = facet_rows(&facets);
    rep.status = status;
    Ok(rep)
}

fn count(weight: [u32; 4], point_budget: u64) -> Result<Report> {
    let lambda = DomWeight::new(weight);
    let dim = weyl_dim(&lambda);
    if dim > point_budget.into() {
        return Err(GuardExceeded(format!(
            "dim V({lambda}) = {dim} exceeds the point budget {point_budget}; raise --point-budget to count anyway"
        ))
        .into());
    }
    let n = count_points_u64(&lambda);
    let mut rep = Report::new(
        "count",
        params(&[("weight", json!(weight)), ("point_budget", json!(point_budget))]),
        json!({ "weight": weight, "count": n }),
    );
    rep.text = n.to_string();
    rep.csv_header = header(&["k1", "k2", "k3", "k4", "count"]);
    rep.csv = vec![weight.iter().map(u32::to_string).chain([n.to_string()]).collect()];
    Ok(rep)
}

fn dim(weight: [u32; 4]) -> Report {
    let d = weyl_dim(&DomWeight::new(weight)).to_string();
    let mut rep = Report::new("dim", params(&[("weight", json!(weight))]), json!({ "weight": weight, "dim": d }));
    rep.text = d.clone();
    rep.csv_header = header(&["k1", "k2", "k3", "k4", "dim"]);
    rep.csv = vec![weight.iter().map(u32::to_string).chain([d]).collect()];
    rep
}

fn decompose(weight: [u32; 4], p: [u32; NUM_POSITIVE], exclude: &[usize]) -> Result<Report> {
    let sigma = Signature::new(DomWeight::new(weight), p);
    let all = transcribed_generators();
    if let Some(bad) = exclude.iter().find(|&&n| n == 0 || n > all.len()) {
        bail!("generator position {bad} out of range 1..={}", all.len());
    }
    let gens: Vec<_> = all.iter().enumerate().filter(|(i, _)| !exclude.contains(&(i + 1))).map(|(_, g)| *g).collect();
    let parameters = params(&[("weight", json!(weight)), ("p", json!(p)), ("exclude", json!(exclude))]);
    let record = SignatureRecord::from(&sigma);
    match decompose_with(&sigma, &gens) {
        Ok(parts) => {
            let sigs: Vec<Signature> = parts.iter().map(|g| g.signature()).collect();
            let records: Vec<SignatureRecord> = sigs.iter().map(SignatureRecord::from).collect();
            let mut rep = Report::new("decompose", parameters, json!({ "signature": record, "parts": records }));
            rep.text = sigs.iter().map(|s| format!("{s}\n")).collect();
            rep.csv_header = header(&SIGNATURE_HEADER);
            rep.csv = signature_rows(&sigs);
            Ok(rep)
        }
        Err(Error::Decomposition(s)) => {
            let mut rep = Report::new(
                "decompose",
                parameters,
                json!({ "signature": record, "parts": Value::Null, "counterexample": SignatureRecord::from(&s) }),
            );
            rep.text = format!("counterexample: {s} is a cone point with no decomposition\n");
            rep.csv_header = header(&SIGNATURE_HEADER);
            rep.csv = signature_rows(&[s]);
            rep.status = Status::Counterexample;
            Ok(rep)
        }
        Err(e) => Err(e.into()),
    }
}

fn verify(max_total: u32, point_budget: u64, jobs: usize, no_timing: bool) -> Report {
    let mut report = verify_dimension_sweep(max_total, point_budget, jobs);
    if no_timing {
        for r in &mut report.rows {
            r.elapsed_ms = 0;
        }
    }
    let rows: Vec<SweepRecord> = report.rows.iter().map(SweepRecord::from).collect();
    let unequal = report.mismatches().len();
    let mut rep = Report::new(
        "verify",
        params(&[
            ("max_total", json!(max_total)),
            ("point_budget", json!(point_budget)),
            ("jobs", json!(jobs)),
            ("no_timing", json!(no_timing)),
        ]),
        json!({
            "max_total": max_total,
            "point_budget": point_budget,
            "checked": report.checked(),
            "skipped": report.skipped(),
            "unequal": unequal,
            "rows": rows,
        }),
    );
    let mut text = String::new();
    for r in &report.rows {
        text += &match (&r.count, &r.skipped_reason) {
            (Some(c), _) => format!(
                "{}  count={c} weyl={} {}\n",
                r.lambda,
                r.weyl,
                if r.equal == Some(true) { "equal" } else { "UNEQUAL" }
            ),
            (None, reason) => format!("{}  skipped: {}\n", r.lambda, reason.as_deref().unwrap_or("")),
        };
    }
    text += &format!(
        "{} weights: {} checked, {} skipped, {} unequal\n",
        report.rows.len(),
        report.checked(),
        report.skipped(),
        unequal
    );
    rep.text = text;
    rep.csv_header = header(&SWEEP_HEADER);
    rep.csv = rows
        .iter()
        .map(|r| {
            vec![
                r.k1.to_string(),
                r.k2.to_string(),
                r.k3.to_string(),
                r.k4.to_string(),
                r.count.map(|c| c.to_string()).unwrap_or_default(),
                r.weyl.clone(),
                r.equal.map(|e| e.to_string()).unwrap_or_default(),
                r.elapsed_ms.to_string(),
                r.skipped_reason.clone().unwrap_or_default(),
            ]
        })
        .collect();
    if unequal > 0 {
        rep.status = Status::Mismatch;
    }
    rep
}
