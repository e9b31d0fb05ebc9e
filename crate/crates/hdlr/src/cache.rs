//! On-disk cache of single structure constants.
//!
//! One file per constant, named by its key and holding the canonical
//! polynomial string. Writes go through a temporary file and a rename.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use hdlr_core::exact::Poly;
use hdlr_core::table::Theory;
use hdlr_core::weightfn::SubsetIndex;

use crate::error::Result;

pub const ENV_VAR: &str = "HDLR_CACHE_DIR";

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CacheKey {
    pub theory: Theory,
    pub d: usize,
    pub n: usize,
    pub i: SubsetIndex,
    pub j: SubsetIndex,
    pub k: SubsetIndex,
    pub equivariant: bool,
}

impl CacheKey {
    /// File name, e.g. `H-gr2-4-3.4-3.4-1.4-ne.txt`.
    pub fn file_name(&self) -> String {
        let s = |x: &SubsetIndex| x.elems().iter().map(|e| e.to_string()).collect::<Vec<_>>().join(".");
        format!(
            "{}-gr{}-{}-{}-{}-{}-{}.txt",
            self.theory,
            self.d,
            self.n,
            s(&self.i),
            s(&self.j),
            s(&self.k),
            if self.equivariant { "eq" } else { "ne" }
        )
    }
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheStats {
    pub dir: PathBuf,
    pub entries: usize,
    pub bytes: u64,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn get(&self, key: &CacheKey) -> Result<Option<Poly>> {
        match fs::read_to_string(self.dir.join(key.file_name())) {
            Ok(s) => Ok(Some(Poly::parse(s.trim())?)),
            Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(e.into()),
        }
    }

    pub fn put(&self, key: &CacheKey, value: &Poly) -> Result<()> {
        write_atomic(&self.dir.join(key.file_name()), format!("{value}\n").as_bytes())
    }

    fn files(&self) -> Result<Vec<PathBuf>> {
        if !self.dir.exists() {
            return Ok(Vec::new());
        }
        let mut out = Vec::new();
        for e in fs::read_dir(&self.dir)? {
            let p = e?.path();
            if p.extension().is_some_and(|x| x == "txt") {
                out.push(p);
            }
        }
        out.sort();
        Ok(out)
    }

    pub fn inspect(&self) -> Result<CacheStats> {
        let files = self.files()?;
        let mut bytes = 0;
        for f in &files {
            bytes += fs::metadata(f)?.len();
        }
        Ok(CacheStats { dir: self.dir.clone(), entries: files.len(), bytes })
    }

    /// Removes all entries; returns how many were removed.
    pub fn clear(&self) -> Result<usize> {
        let files = self.files()?;
        for f in &files {
            fs::remove_file(f)?;
        }
        Ok(files.len())
    }
}

/// Writes `path` via a temporary file in the same directory, creating the
/// directory if needed.
pub fn write_atomic(path: &Path, bytes: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    fs::create_dir_all(dir)?;
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(bytes)?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn key() -> CacheKey {
        let s = |e: &[usize]| SubsetIndex::new(4, e).unwrap();
        CacheKey { theory: Theory::H, d: 2, n: 4, i: s(&[3, 4]), j: s(&[3, 4]), k: s(&[1, 4]), equivariant: false }
    }

    #[test]
    fn round_trip_and_clear() {
        let dir = tempfile::tempdir().unwrap();
        let c = Cache::new(dir.path().join("sub"));
        assert_eq!(c.inspect().unwrap().entries, 0);
        assert_eq!(c.get(&key()).unwrap(), None);
        let v = Poly::parse("7*h^4").unwrap();
        c.put(&key(), &v).unwrap();
        assert_eq!(c.get(&key()).unwrap(), Some(v));
        assert_eq!(key().file_name(), "H-gr2-4-3.4-3.4-1.4-ne.txt");
        assert_eq!(c.inspect().unwrap().entries, 1);
        assert_eq!(c.clear().unwrap(), 1);
        assert_eq!(c.get(&key()).unwrap(), None);
    }
}
