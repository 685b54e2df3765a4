//! On-disk census cache: one JSON file per (base table, arity), written to
//! a temporary file in the same directory and renamed into place.

use std::io::Write;
use std::path::{Path, PathBuf};

use crate::docs::CensusDoc;
use crate::error::{CliError, CliResult};
use crate::io;

/// Environment variable naming the cache directory.
pub const CACHE_ENV: &str = "SUBDIRECT_CACHE_DIR";

pub struct CensusCache {
    dir: PathBuf,
}

impl CensusCache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        CensusCache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    /// Keys on the exact table rather than an isomorphism invariant, since
    /// cached representatives are written in the base's own labels.
    pub fn key(base: &subdirect_core::FiniteSemigroup, arity: usize) -> String {
        io::hex_digest(format!("{}n={arity}", io::to_json(base)).as_bytes())
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("census-{key}.json"))
    }

    /// A cached census, or `None` when absent. Unreadable entries count as
    /// absent and are recomputed.
    pub fn get(&self, base: &subdirect_core::FiniteSemigroup, arity: usize) -> Option<CensusDoc> {
        let text = std::fs::read_to_string(self.path(&Self::key(base, arity))).ok()?;
        let doc: CensusDoc = serde_json::from_str(&text).ok()?;
        (doc.base == *base && doc.arity == arity).then_some(doc)
    }

    pub fn put(&self, doc: &CensusDoc) -> CliResult<PathBuf> {
        let target = self.path(&Self::key(&doc.base, doc.arity));
        std::fs::create_dir_all(&self.dir).map_err(|e| CliError::io(&self.dir, e))?;
        let mut tmp = tempfile::NamedTempFile::new_in(&self.dir).map_err(|e| CliError::io(&self.dir, e))?;
        let text = serde_json::to_string(doc).expect("census serializes");
        tmp.write_all(text.as_bytes()).map_err(|e| CliError::io(tmp.path(), e))?;
        tmp.persist(&target).map_err(|e| CliError::io(&target, e.error))?;
        Ok(target)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use subdirect_core::catalog;
    use subdirect_core::enumerate::{enumerate_subdirect, DEFAULT_CENSUS_CAP};

    #[test]
    fn stores_and_reloads() {
        let dir = tempfile::tempdir().unwrap();
        let cache = CensusCache::new(dir.path().join("nested"));
        let l2 = catalog::get("L2").unwrap();
        assert!(cache.get(&l2, 2).is_none());
        let doc = CensusDoc::from(&enumerate_subdirect(&l2, 2, DEFAULT_CENSUS_CAP).unwrap());
        let path = cache.put(&doc).unwrap();
        assert!(path.is_file());
        assert_eq!(cache.get(&l2, 2), Some(doc.clone()));
        assert!(cache.get(&l2, 3).is_none());
        // a relabelled base has its own entry
        assert!(cache.get(&l2.relabel(&[1, 0]).unwrap(), 2).is_none());
        // no stray temporary files
        assert_eq!(std::fs::read_dir(cache.dir()).unwrap().count(), 1);
        std::fs::write(&path, "{").unwrap();
        assert!(cache.get(&l2, 2).is_none());
    }
}
