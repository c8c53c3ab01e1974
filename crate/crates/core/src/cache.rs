//! Optional on-disk memo of matching vectors, keyed by canonical form.
//!
//! One file per isomorphism class, named by the hex encoding of the
//! canonical graph6 string and holding the order followed by the counts.
//! Unreadable or malformed entries are recomputed and overwritten.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use num_bigint::BigUint;

use crate::graph::Graph;
use crate::matching::{matching_vector, MatchingVector};

pub const CACHE_ENV: &str = "MATCHROOTS_CACHE";

#[derive(Clone, Debug)]
pub struct SpillCache {
    dir: PathBuf,
}

impl SpillCache {
    pub fn new(dir: impl Into<PathBuf>) -> io::Result<SpillCache> {
        let dir = dir.into();
        fs::create_dir_all(&dir)?;
        Ok(SpillCache { dir })
    }

    /// The cache named by `MATCHROOTS_CACHE`, if set and non-empty.
    pub fn from_env() -> io::Result<Option<SpillCache>> {
        match std::env::var_os(CACHE_ENV) {
            Some(dir) if !dir.is_empty() => SpillCache::new(dir).map(Some),
            _ => Ok(None),
        }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    fn path_for(&self, canon: &Graph) -> PathBuf {
        let g6 = canon.to_graph6().expect("cached graphs are within graph6 range");
        let name: String = g6.bytes().map(|b| format!("{b:02x}")).collect();
        self.dir.join(format!("{name}.mv"))
    }

    fn load(path: &Path) -> Option<MatchingVector> {
        let text = fs::read_to_string(path).ok()?;
        let mut fields = text.split_whitespace();
        let order = fields.next()?.parse().ok()?;
        let counts: Option<Vec<BigUint>> = fields.map(|f| f.parse().ok()).collect();
        MatchingVector::from_stored(order, counts?)
    }

    /// The matching vector of `g`, read from the cache when present.
    pub fn matching_vector(&self, g: &Graph) -> MatchingVector {
        let canon = g.canonical_graph();
        let path = self.path_for(&canon);
        if let Some(v) = Self::load(&path).filter(|v| v.order() == g.order()) {
            return v;
        }
        let v = matching_vector(&canon);
        let body: Vec<String> =
            std::iter::once(v.order().to_string()).chain(v.counts().iter().map(|c| c.to_string())).collect();
        // Losing a write only costs a recomputation.
        let tmp = path.with_extension("tmp");
        if fs::write(&tmp, body.join(" ")).is_ok() {
            let _ = fs::rename(&tmp, &path);
        }
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trips_and_heals() {
        let dir = tempfile::tempdir().unwrap();
        let cache = SpillCache::new(dir.path()).unwrap();
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let first = cache.matching_vector(&g);
        assert_eq!(first, matching_vector(&g));
        let path = cache.path_for(&g.canonical_graph());
        assert_eq!(fs::read_to_string(&path).unwrap(), "5 1 5 5");
        let relabeled = g.relabel(&[2, 0, 4, 1, 3]);
        assert_eq!(cache.matching_vector(&relabeled), first);
        fs::write(&path, "garbage").unwrap();
        assert_eq!(cache.matching_vector(&g), first);
        assert_eq!(fs::read_to_string(&path).unwrap(), "5 1 5 5");
    }
}
