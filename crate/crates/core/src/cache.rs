//! Append-only JSON-lines result cache, so long sweeps can resume.
//!
//! Each line is `{"key": …, "op": …, "value": …}`. Keys are SHA-256 digests of
//! the full multiplication table, the generating set, the operation name and
//! its parameters (caps, seed). A later line with the same key wins.

use std::collections::HashMap;
use std::fs::{self, File, OpenOptions};
use std::io::{BufRead, BufReader, Write};
use std::path::{Path, PathBuf};

use log::{debug, warn};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::Result;
use crate::group::{Element, FiniteGroup};

pub const CACHE_ENV: &str = "CAYLEY_CACHE";

#[derive(Serialize, Deserialize)]
struct Line {
    key: String,
    op: String,
    value: serde_json::Value,
}

#[derive(Debug, Default)]
pub struct Cache {
    path: Option<PathBuf>,
    entries: HashMap<String, serde_json::Value>,
}

/// `$CAYLEY_CACHE`, else `$HOME/.cache/cayley/results.jsonl`.
pub fn default_path() -> Option<PathBuf> {
    if let Some(p) = std::env::var_os(CACHE_ENV) {
        return Some(PathBuf::from(p));
    }
    std::env::var_os("HOME").map(|h| Path::new(&h).join(".cache/cayley/results.jsonl"))
}

/// Content key for one computation.
pub fn cache_key(group: &FiniteGroup, genset: &[Element], op: &str, params: &str) -> String {
    let mut h = Sha256::new();
    h.update((group.order() as u64).to_le_bytes());
    for v in group.raw_table() {
        h.update(v.to_le_bytes());
    }
    h.update([0xff]);
    for &g in genset {
        h.update((g as u64).to_le_bytes());
    }
    h.update([0xff]);
    h.update(op.as_bytes());
    h.update([0]);
    h.update(params.as_bytes());
    hex::encode(h.finalize())
}

impl Cache {
    pub fn disabled() -> Self {
        Cache::default()
    }

    /// Loads every readable line; unreadable lines are skipped with a warning.
    pub fn open(path: impl Into<PathBuf>) -> Result<Self> {
        let path = path.into();
        let mut entries = HashMap::new();
        if path.exists() {
            for (no, line) in BufReader::new(File::open(&path)?).lines().enumerate() {
                let line = line?;
                if line.trim().is_empty() {
                    continue;
                }
                match serde_json::from_str::<Line>(&line) {
                    Ok(l) => {
                        entries.insert(l.key, l.value);
                    }
                    Err(e) => warn!("{}:{}: skipping cache line: {e}", path.display(), no + 1),
                }
            }
        }
        debug!("cache {}: {} entries", path.display(), entries.len());
        Ok(Cache {
            path: Some(path),
            entries,
        })
    }

    pub fn is_enabled(&self) -> bool {
        self.path.is_some()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get<T: DeserializeOwned>(&self, key: &str) -> Option<T> {
        self.entries
            .get(key)
            .and_then(|v| serde_json::from_value(v.clone()).ok())
    }

    pub fn put<T: Serialize>(&mut self, key: &str, op: &str, value: &T) -> Result<()> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        let value = serde_json::to_value(value).expect("cache values serialize");
        if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
            fs::create_dir_all(parent)?;
        }
        let line = Line {
            key: key.to_string(),
            op: op.to_string(),
            value: value.clone(),
        };
        let mut file = OpenOptions::new().create(true).append(true).open(path)?;
        writeln!(
            file,
            "{}",
            serde_json::to_string(&line).expect("cache line serializes")
        )?;
        self.entries.insert(key.to_string(), value);
        Ok(())
    }

    /// Returns the cached value or computes, stores and returns it.
    pub fn get_or_compute<T, F>(&mut self, key: &str, op: &str, compute: F) -> Result<T>
    where
        T: Serialize + DeserializeOwned,
        F: FnOnce() -> Result<T>,
    {
        if let Some(v) = self.get(key) {
            debug!("cache hit for {op}");
            return Ok(v);
        }
        let v = compute()?;
        self.put(key, op, &v)?;
        Ok(v)
    }
}
