//! Write-through JSON cache of computed polynomials, keyed by
//! `(object, m, n)`. A file written by a different version is ignored.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use qhankel_core::IntPoly;
use serde::{Deserialize, Serialize};

use crate::error::CliError;

pub const CACHE_ENV: &str = "QHANKEL_CACHE";
pub const CACHE_VERSION: &str = concat!("qhankel-cache/1/", env!("CARGO_PKG_VERSION"));

#[derive(Debug, Clone, Serialize, Deserialize)]
struct CacheFile {
    version: String,
    entries: BTreeMap<String, IntPoly>,
}

#[derive(Debug)]
pub struct ResultCache {
    path: PathBuf,
    entries: BTreeMap<String, IntPoly>,
}

pub fn key(object: &str, m: i64, n: i64) -> String {
    format!("{object}:{m}:{n}")
}

impl ResultCache {
    /// `--cache` wins over the environment; no path means no cache.
    pub fn resolve(flag: Option<&Path>) -> Option<PathBuf> {
        flag.map(Path::to_path_buf)
            .or_else(|| std::env::var_os(CACHE_ENV).filter(|v| !v.is_empty()).map(PathBuf::from))
    }

    pub fn open(path: &Path) -> Self {
        let entries = fs::read_to_string(path)
            .ok()
            .and_then(|text| match serde_json::from_str::<CacheFile>(&text) {
                Ok(file) if file.version == CACHE_VERSION => Some(file.entries),
                Ok(file) => {
                    eprintln!("cache: ignoring {} (version {})", path.display(), file.version);
                    None
                }
                Err(e) => {
                    eprintln!("cache: ignoring unreadable {}: {e}", path.display());
                    None
                }
            })
            .unwrap_or_default();
        ResultCache {
            path: path.to_path_buf(),
            entries,
        }
    }

    pub fn get(&self, key: &str) -> Option<&IntPoly> {
        self.entries.get(key)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn put(&mut self, key: String, value: IntPoly) -> Result<(), CliError> {
        if self.entries.get(&key) == Some(&value) {
            return Ok(());
        }
        self.entries.insert(key, value);
        self.flush()
    }

    fn flush(&self) -> Result<(), CliError> {
        let file = CacheFile {
            version: CACHE_VERSION.to_string(),
            entries: self.entries.clone(),
        };
        let text = serde_json::to_string(&file).map_err(|e| CliError::Io(e.into()))?;
        let tmp = self.path.with_extension("tmp");
        fs::write(&tmp, text)?;
        fs::rename(&tmp, &self.path)?;
        Ok(())
    }
}
