//! Versioned on-disk cache of big-integer counts.

use std::collections::BTreeMap;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::{Deserialize, Serialize};

pub const CACHE_ENV: &str = "CROSSNEST_CACHE";
const VERSION: u32 = 1;

#[derive(Debug, Serialize, Deserialize)]
struct CacheFile {
    version: u32,
    entries: BTreeMap<String, String>,
}

/// Cache location: `$CROSSNEST_CACHE`, else the user cache directory.
pub fn default_path() -> PathBuf {
    if let Some(p) = std::env::var_os(CACHE_ENV) {
        return PathBuf::from(p);
    }
    let base = std::env::var_os("XDG_CACHE_HOME")
        .map(PathBuf::from)
        .or_else(|| std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache")))
        .unwrap_or_else(std::env::temp_dir);
    base.join("crossnest").join("counts.json")
}

pub struct Cache {
    path: Option<PathBuf>,
    entries: BTreeMap<String, String>,
    dirty: bool,
}

impl Cache {
    /// A cache that never reads or writes.
    pub fn disabled() -> Self {
        Cache {
            path: None,
            entries: BTreeMap::new(),
            dirty: false,
        }
    }

    /// Loads the cache; a missing file is an empty cache.
    pub fn open(path: &Path) -> Result<Self> {
        let entries = match std::fs::read_to_string(path) {
            Ok(text) => {
                let file: CacheFile =
                    serde_json::from_str(&text).with_context(|| format!("malformed cache file {}", path.display()))?;
                if file.version != VERSION {
                    bail!("cache file {} has version {}, expected {VERSION}", path.display(), file.version);
                }
                file.entries
            }
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => BTreeMap::new(),
            Err(e) => return Err(e).with_context(|| format!("reading cache file {}", path.display())),
        };
        Ok(Cache {
            path: Some(path.to_path_buf()),
            entries,
            dirty: false,
        })
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.get(key).map(String::as_str)
    }

    pub fn insert(&mut self, key: String, value: String) {
        if self.path.is_some() && self.entries.get(&key) != Some(&value) {
            self.entries.insert(key, value);
            self.dirty = true;
        }
    }

    /// Looks `key` up, computing and recording it on a miss.
    pub fn get_or_compute<E>(&mut self, key: String, compute: impl FnOnce() -> Result<String, E>) -> Result<String, E> {
        if let Some(v) = self.get(&key) {
            return Ok(v.to_string());
        }
        let v = compute()?;
        self.insert(key, v.clone());
        Ok(v)
    }

    /// Writes the cache through a temporary file and an atomic rename.
    pub fn save(&mut self) -> Result<()> {
        let Some(path) = &self.path else {
            return Ok(());
        };
        if !self.dirty {
            return Ok(());
        }
        let dir = path.parent().filter(|d| !d.as_os_str().is_empty()).unwrap_or(Path::new("."));
        std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
        let file = CacheFile {
            version: VERSION,
            entries: self.entries.clone(),
        };
        serde_json::to_writer_pretty(&mut tmp, &file)?;
        tmp.write_all(b"\n")?;
        tmp.persist(path).with_context(|| format!("writing cache file {}", path.display()))?;
        self.dirty = false;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_versioning() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("sub").join("c.json");
        let mut c = Cache::open(&path).unwrap();
        assert_eq!(c.get_or_compute::<()>("gkj:k=1,j=1,m=3".into(), || Ok("1".into())).unwrap(), "1");
        c.save().unwrap();
        let text = std::fs::read_to_string(&path).unwrap();
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v["version"], 1);
        assert_eq!(v["entries"]["gkj:k=1,j=1,m=3"], "1");
        let c = Cache::open(&path).unwrap();
        assert_eq!(c.get("gkj:k=1,j=1,m=3"), Some("1"));
        std::fs::write(&path, r#"{"version":2,"entries":{}}"#).unwrap();
        assert!(Cache::open(&path).is_err());
    }

    #[test]
    fn disabled_cache_stores_nothing() {
        let mut c = Cache::disabled();
        c.insert("a".into(), "1".into());
        assert_eq!(c.get("a"), None);
        c.save().unwrap();
    }
}
