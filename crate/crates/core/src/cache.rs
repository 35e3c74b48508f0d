//! On-disk memo of Kostant partition values.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::charring::CharRing;
use crate::error::Result;
use crate::laurent::LaurentPoly;
use crate::rootdata::Weight;

pub const CACHE_VERSION: u32 = 1;
pub const CACHE_FILE_NAME: &str = "exotic-cache.json";

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheFile {
    pub version: u32,
    /// Root-system spec to `(weight, P_weight)` entries.
    pub kostant: BTreeMap<String, Vec<CacheEntry>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheEntry {
    pub weight: Weight,
    pub poly: LaurentPoly,
}

impl CacheFile {
    pub fn new() -> Self {
        Self { version: CACHE_VERSION, kostant: BTreeMap::new() }
    }

    /// A directory maps to the standard file name inside it.
    pub fn resolve(path: &Path) -> PathBuf {
        if path.is_dir() {
            path.join(CACHE_FILE_NAME)
        } else {
            path.to_path_buf()
        }
    }

    /// Reads a cache; a missing, unreadable or wrong-version file yields an empty cache.
    pub fn load(path: &Path) -> Self {
        let Ok(text) = fs::read_to_string(path) else { return Self::new() };
        match serde_json::from_str::<CacheFile>(&text) {
            Ok(c) if c.version == CACHE_VERSION => c,
            _ => Self::new(),
        }
    }

    pub fn save(&self, path: &Path) -> Result<()> {
        if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
            fs::create_dir_all(dir)?;
        }
        let tmp = path.with_extension("json.tmp");
        fs::write(&tmp, serde_json::to_string(self)?)?;
        fs::rename(tmp, path)?;
        Ok(())
    }

    /// Seeds the ring's memo with the entries for its root system.
    pub fn apply(&self, ring: &CharRing) {
        if let Some(entries) = self.kostant.get(ring.root_system().spec()) {
            ring.import_kostant(entries.iter().map(|e| (e.weight.clone(), e.poly.clone())));
        }
    }

    /// Replaces the entries for the ring's root system by its current memo.
    pub fn collect(&mut self, ring: &CharRing) {
        let entries = ring.export_kostant().into_iter().map(|(weight, poly)| CacheEntry { weight, poly }).collect();
        self.kostant.insert(ring.root_system().spec().to_string(), entries);
    }
}
