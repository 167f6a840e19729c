//! Append-only JSON-lines persistence for exact relative class
//! numbers, keyed by modulus. Duplicate keys must agree; disagreement
//! is a data-integrity error.

use std::collections::BTreeSet;
use std::fs::OpenOptions;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use cyclofc_core::criteria::HCache;
use num_bigint::BigUint;

use crate::wire::{CacheRecord, SCHEMA_VERSION};

pub const CACHE_ENV: &str = "CYCLOFC_CACHE";
pub const CACHE_DEFAULT: &str = "cyclofc_cache.jsonl";

/// Flag value beats the environment override beats the default name.
pub fn resolve_cache_path(flag: Option<&Path>) -> PathBuf {
    if let Some(p) = flag {
        return p.to_path_buf();
    }
    if let Ok(env) = std::env::var(CACHE_ENV) {
        if !env.is_empty() {
            return PathBuf::from(env);
        }
    }
    PathBuf::from(CACHE_DEFAULT)
}

/// Load every record; a missing file is an empty cache.
pub fn load(path: &Path) -> Result<HCache> {
    let mut cache = HCache::new();
    if !path.exists() {
        return Ok(cache);
    }
    let text = std::fs::read_to_string(path)
        .with_context(|| format!("reading cache {}", path.display()))?;
    for (lineno, line) in text.lines().enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let rec: CacheRecord = serde_json::from_str(line).with_context(|| {
            format!("corrupted cache {} at line {}", path.display(), lineno + 1)
        })?;
        if rec.version != SCHEMA_VERSION {
            bail!(
                "cache {} line {}: unrecognized schema version {}",
                path.display(),
                lineno + 1,
                rec.version
            );
        }
        let h = BigUint::from_str(&rec.h_minus).with_context(|| {
            format!(
                "cache {} line {}: h_minus is not a decimal integer",
                path.display(),
                lineno + 1
            )
        })?;
        if let Some(existing) = cache.get(rec.m) {
            if *existing != h {
                bail!(
                    "cache {} line {}: duplicate modulus {} disagrees ({} vs {})",
                    path.display(),
                    lineno + 1,
                    rec.m,
                    existing,
                    h
                );
            }
        } else {
            cache.insert(rec.m, h);
        }
    }
    Ok(cache)
}

/// Append records for moduli present in `cache` but absent from the
/// file when it was loaded (`known` is the set of moduli already on
/// disk). Returns how many records were written.
pub fn append_new(path: &Path, cache: &HCache, known: &BTreeSet<u64>) -> Result<usize> {
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .with_context(|| format!("opening cache {} for append", path.display()))?;
    let mut written = 0;
    for (&m, h) in cache.moduli() {
        if known.contains(&m) {
            continue;
        }
        let rec = CacheRecord {
            version: SCHEMA_VERSION,
            m,
            h_minus: h.to_string(),
            computed_by: "generalized-bernoulli-orbit-product".to_string(),
        };
        serde_json::to_writer(&mut file, &rec)?;
        file.write_all(b"\n")?;
        written += 1;
    }
    Ok(written)
}

pub fn known_moduli(cache: &HCache) -> BTreeSet<u64> {
    cache.moduli().map(|(&m, _)| m).collect()
}
