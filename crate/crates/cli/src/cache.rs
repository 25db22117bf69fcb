//! On-disk cache for the cone computation, keyed by a content hash of the
//! generator table.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::Context;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use essig::cone::{dual_description, fundamental_generators, transcribed_generators, RayGenerator};
use essig::models::Models;

use crate::output::{FacetRecord, SignatureRecord};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConeCache {
    pub generator_hash: String,
    pub generators: Vec<SignatureRecord>,
    pub span_dim: usize,
    pub facets: Vec<FacetRecord>,
}

impl ConeCache {
    pub fn rays(&self) -> Vec<RayGenerator> {
        self.generators.iter().map(|g| RayGenerator::from_signature(&g.signature())).collect()
    }
}

fn generator_records(gens: &[RayGenerator]) -> Vec<SignatureRecord> {
    gens.iter().map(|g| SignatureRecord::from(&g.signature())).collect()
}

/// sha256 of the canonical JSON of the transcribed generator table.
pub fn generator_hash() -> String {
    let json = serde_json::to_vec(&generator_records(&transcribed_generators())).expect("serializable");
    hex::encode(Sha256::digest(&json))
}

pub fn cache_path(dir: &Path, hash: &str) -> PathBuf {
    dir.join(format!("cone-{}.json", &hash[..16]))
}

pub enum Lookup {
    Hit(ConeCache),
    Miss(ConeCache),
}

impl Lookup {
    pub fn into_inner(self) -> ConeCache {
        match self {
            Lookup::Hit(c) | Lookup::Miss(c) => c,
        }
    }
}

fn read(path: &Path, hash: &str) -> Option<ConeCache> {
    let bytes = fs::read(path).ok()?;
    let c: ConeCache = serde_json::from_slice(&bytes).ok()?;
    (c.generator_hash == hash).then_some(c)
}

/// Loads the cone from `dir`, or computes it (checking the computed
/// fundamental tables against the transcription) and stores it.
pub fn load_or_compute(dir: &Path) -> anyhow::Result<Lookup> {
    let hash = generator_hash();
    let path = cache_path(dir, &hash);
    if let Some(c) = read(&path, &hash) {
        return Ok(Lookup::Hit(c));
    }
    let gens = fundamental_generators(Models::standard())?;
    let dual = dual_description(&gens)?;
    let c = ConeCache {
        generator_hash: hash,
        generators: generator_records(&gens),
        span_dim: dual.span_dim,
        facets: dual.facets.iter().map(FacetRecord::from).collect(),
    };
    fs::create_dir_all(dir).with_context(|| format!("creating cache directory {}", dir.display()))?;
    let tmp = path.with_extension("json.tmp");
    fs::write(&tmp, serde_json::to_vec_pretty(&c)?)?;
    fs::rename(&tmp, &path)?;
    Ok(Lookup::Miss(c))
}
