//! Structure-constant tables shared by all pipelines.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::exact::Poly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Theory {
    /// Cohomology, CSM classes.
    H,
    /// K-theory, motivic Chern classes.
    K,
}

impl Theory {
    pub fn parse(s: &str) -> Option<Theory> {
        match s {
            "H" | "h" => Some(Theory::H),
            "K" | "k" => Some(Theory::K),
            _ => None,
        }
    }
}

impl fmt::Display for Theory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Theory::H => "H",
            Theory::K => "K",
        })
    }
}

/// Table of constants `c^k_{i,j}` of a basis indexed by `labels`, stored
/// symmetrically in `i, j`. Absent entries are zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SCTable {
    pub theory: Theory,
    pub labels: Vec<String>,
    entries: BTreeMap<(usize, usize, usize), Poly>,
    /// Provenance, e.g. space, pipeline and engine version.
    pub metadata: BTreeMap<String, String>,
}

impl SCTable {
    pub fn new(theory: Theory, labels: Vec<String>) -> Self {
        SCTable { theory, labels, entries: BTreeMap::new(), metadata: BTreeMap::new() }
    }

    pub fn with_meta(mut self, key: &str, value: &str) -> Self {
        self.metadata.insert(key.into(), value.into());
        self
    }

    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn set(&mut self, i: usize, j: usize, k: usize, value: Poly) {
        let key = (i.min(j), i.max(j), k);
        if value.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, value);
        }
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> Poly {
        self.entries.get(&(i.min(j), i.max(j), k)).cloned().unwrap_or_default()
    }

    /// Nonzero `(k, c^k_{i,j})`, in increasing `k`.
    pub fn product(&self, i: usize, j: usize) -> Vec<(usize, Poly)> {
        let (a, b) = (i.min(j), i.max(j));
        self.entries.range((a, b, 0)..=(a, b, usize::MAX)).map(|(&(_, _, k), v)| (k, v.clone())).collect()
    }

    /// Nonzero entries `((i, j, k), value)` with `i <= j`.
    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize, usize), &Poly)> {
        self.entries.iter()
    }

    pub fn label_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn symmetric_storage() {
        let mut t = SCTable::new(Theory::H, ["1", "2"].iter().map(|s| s.to_string()).collect());
        t.set(1, 0, 0, Poly::h());
        assert_eq!(t.get(0, 1, 0), Poly::h());
        assert_eq!(t.product(1, 0), [(0, Poly::h())]);
        t.set(0, 1, 0, Poly::zero());
        assert_eq!(t.entries().count(), 0);
    }
}
