//! On-disk cache of symbolic polynomials keyed by (rank, weight).
//!
//! Each file wraps the canonical JSON document with a format version and a
//! SHA-256 checksum of the document text. Files that fail either check are
//! ignored with a warning and overwritten on the next store.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use gegenlab::{KappaRational, Weight, ZPolynomial};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::json::{from_doc, symbolic_doc, to_string, PolyDoc};

pub const CACHE_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct Entry {
    version: u32,
    checksum: String,
    polynomial: PolyDoc,
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

/// Outcome of a lookup, so callers can report what happened.
#[derive(Debug)]
pub enum Lookup {
    Hit(ZPolynomial<KappaRational>),
    Miss,
    Rejected(String),
}

fn checksum(doc: &PolyDoc) -> String {
    hex::encode(Sha256::digest(to_string(doc).as_bytes()))
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path(&self, weight: &Weight) -> PathBuf {
        let w: Vec<String> = weight.0.iter().map(|x| x.to_string()).collect();
        self.dir.join(format!("p_rank{}_{}.json", weight.rank(), w.join("-")))
    }

    pub fn load(&self, weight: &Weight) -> Lookup {
        let path = self.path(weight);
        let Ok(text) = fs::read_to_string(&path) else {
            return Lookup::Miss;
        };
        let entry: Entry = match serde_json::from_str(&text) {
            Ok(e) => e,
            Err(e) => return Lookup::Rejected(format!("{}: unreadable ({e})", path.display())),
        };
        if entry.version != CACHE_VERSION {
            return Lookup::Rejected(format!(
                "{}: version {} (expected {CACHE_VERSION})",
                path.display(),
                entry.version
            ));
        }
        if entry.checksum != checksum(&entry.polynomial) {
            return Lookup::Rejected(format!("{}: checksum mismatch", path.display()));
        }
        match from_doc(&entry.polynomial) {
            Ok((w, p)) if &w == weight => Lookup::Hit(p),
            Ok((w, _)) => Lookup::Rejected(format!("{}: holds P_{w}", path.display())),
            Err(e) => Lookup::Rejected(format!("{}: {e}", path.display())),
        }
    }

    pub fn store(&self, weight: &Weight, p: &ZPolynomial<KappaRational>) -> Result<()> {
        fs::create_dir_all(&self.dir).with_context(|| format!("creating {}", self.dir.display()))?;
        let polynomial = symbolic_doc(weight, p);
        let entry = Entry { version: CACHE_VERSION, checksum: checksum(&polynomial), polynomial };
        let path = self.path(weight);
        let text = serde_json::to_string(&entry).expect("plain data serializes");
        fs::write(&path, text + "\n").with_context(|| format!("writing {}", path.display()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use gegenlab::gegenbauer::gen_eigen;

    #[test]
    fn round_trip_and_rejection() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache::new(dir.path());
        let w = Weight(vec![0, 2, 0]);
        assert!(matches!(cache.load(&w), Lookup::Miss));
        let p = gen_eigen(&w, 4).unwrap();
        cache.store(&w, &p).unwrap();
        match cache.load(&w) {
            Lookup::Hit(q) => assert_eq!(q, p),
            other => panic!("{other:?}"),
        }
        let text = fs::read_to_string(cache.path(&w)).unwrap();
        fs::write(cache.path(&w), text.replace("\"-2\"", "\"-3\"")).unwrap();
        assert!(matches!(cache.load(&w), Lookup::Rejected(_)));
        fs::write(cache.path(&w), text.replace("\"version\":1", "\"version\":0")).unwrap();
        assert!(matches!(cache.load(&w), Lookup::Rejected(_)));
    }
}
