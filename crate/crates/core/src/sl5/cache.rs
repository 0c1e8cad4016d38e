//! Memory and disk cache for irreducible modules `F(λ)`.
//!
//! Disk format (text, one file per weight):
//!
//! ```text
//! e510-sl5-module v1
//! lambda n1,n2,n3,n4
//! dim D
//! basis D
//! weight n1 n2 n3 n4 parent f      (D lines; parent/f are "-" for the top vector)
//! matrix e1 NNZ
//! row col numerator denominator    (NNZ lines)
//! ... (e1..e4, f1..f4)
//! end
//! ```

use std::collections::HashMap;
use std::fs;
use std::io::Write;
use std::path::{Path as FsPath, PathBuf};
use std::sync::{Arc, Mutex};

use super::build::{build_irreducible, NotDominant};
use super::module::{Path, Sl5Module};
use super::weight::Weight;
use crate::exact::{Rational, SparseMatrix};

pub const CACHE_MAGIC: &str = "e510-sl5-module v1";

/// Why a cache file was not usable.
#[derive(Debug, thiserror::Error)]
pub enum CacheError {
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("version mismatch: found {0:?}")]
    Version(String),
    #[error("malformed cache file: {0}")]
    Malformed(String),
}

fn malformed(s: impl Into<String>) -> CacheError {
    CacheError::Malformed(s.into())
}

pub fn serialize(lambda: Weight, m: &Sl5Module) -> String {
    let mut s = String::new();
    let n = lambda.0;
    s.push_str(CACHE_MAGIC);
    s.push('\n');
    s.push_str(&format!("lambda {},{},{},{}\n", n[0], n[1], n[2], n[3]));
    s.push_str(&format!("dim {}\nbasis {}\n", m.dim(), m.dim()));
    let paths = m.paths.as_ref();
    for (j, w) in m.weights.iter().enumerate() {
        let p = paths.and_then(|p| p[j]);
        let (a, b) = match p {
            Some(Path { parent, f }) => (parent.to_string(), f.to_string()),
            None => ("-".into(), "-".into()),
        };
        s.push_str(&format!(
            "weight {} {} {} {} {a} {b}\n",
            w.0[0], w.0[1], w.0[2], w.0[3]
        ));
    }
    for (name, mats) in [("e", &m.e), ("f", &m.f)] {
        for (i, mat) in mats.iter().enumerate() {
            s.push_str(&format!("matrix {name}{} {}\n", i + 1, mat.nnz()));
            for (r, c, v) in mat.entries() {
                s.push_str(&format!("{r} {c} {} {}\n", v.numer(), v.denom()));
            }
        }
    }
    s.push_str("end\n");
    s
}

pub fn deserialize(text: &str, expect: Weight) -> Result<Sl5Module, CacheError> {
    let mut lines = text.lines();
    let magic = lines.next().unwrap_or_default();
    if magic != CACHE_MAGIC {
        return Err(CacheError::Version(magic.to_string()));
    }
    let lam = lines
        .next()
        .and_then(|l| l.strip_prefix("lambda "))
        .and_then(|l| l.parse::<Weight>().ok())
        .ok_or_else(|| malformed("lambda"))?;
    if lam != expect {
        return Err(malformed(format!("weight {lam} where {expect} expected")));
    }
    let mut header = |key: &str| -> Result<usize, CacheError> {
        lines
            .next()
            .and_then(|l| l.strip_prefix(key))
            .and_then(|l| l.trim().parse().ok())
            .ok_or_else(|| malformed(key.to_string()))
    };
    let dim = header("dim ")?;
    let count = header("basis ")?;
    if dim != count {
        return Err(malformed("basis count"));
    }
    let mut weights = Vec::with_capacity(dim);
    let mut paths = Vec::with_capacity(dim);
    for _ in 0..dim {
        let l = lines.next().ok_or_else(|| malformed("weights"))?;
        let f: Vec<&str> = l.split_whitespace().collect();
        if f.len() != 7 || f[0] != "weight" {
            return Err(malformed("weight line"));
        }
        let w: Vec<i64> = f[1..5]
            .iter()
            .map(|x| x.parse().map_err(|_| malformed("weight value")))
            .collect::<Result<_, _>>()?;
        weights.push(Weight([w[0], w[1], w[2], w[3]]));
        paths.push(if f[5] == "-" {
            None
        } else {
            Some(Path {
                parent: f[5].parse().map_err(|_| malformed("parent"))?,
                f: f[6].parse().map_err(|_| malformed("f index"))?,
            })
        });
    }
    let mut mats = Vec::new();
    for name in ["e1", "e2", "e3", "e4", "f1", "f2", "f3", "f4"] {
        let l = lines.next().ok_or_else(|| malformed("matrix header"))?;
        let f: Vec<&str> = l.split_whitespace().collect();
        if f.len() != 3 || f[0] != "matrix" || f[1] != name {
            return Err(malformed(format!("matrix header {name}")));
        }
        let nnz: usize = f[2].parse().map_err(|_| malformed("nnz"))?;
        let mut t = Vec::with_capacity(nnz);
        for _ in 0..nnz {
            let l = lines.next().ok_or_else(|| malformed("entry"))?;
            let f: Vec<&str> = l.split_whitespace().collect();
            if f.len() != 4 {
                return Err(malformed("entry"));
            }
            let r: usize = f[0].parse().map_err(|_| malformed("row"))?;
            let c: usize = f[1].parse().map_err(|_| malformed("col"))?;
            if r >= dim || c >= dim {
                return Err(malformed("index out of range"));
            }
            let v: Rational = format!("{}/{}", f[2], f[3])
                .parse()
                .map_err(|_| malformed("value"))?;
            t.push((r, c, v));
        }
        mats.push(SparseMatrix::from_triplets(dim, dim, t));
    }
    if lines.next() != Some("end") {
        return Err(malformed("trailer"));
    }
    let mut it = mats.into_iter();
    let e = std::array::from_fn(|_| it.next().unwrap());
    let f = std::array::from_fn(|_| it.next().unwrap());
    Ok(Sl5Module::new(
        format!("F{expect}"),
        weights,
        e,
        f,
        Some(paths),
    ))
}

/// Build-once cache of `F(λ)`: in memory, and optionally on disk.
pub struct ModuleCache {
    dir: Option<PathBuf>,
    mem: Mutex<HashMap<Weight, Arc<Sl5Module>>>,
}

impl ModuleCache {
    pub fn in_memory() -> Self {
        ModuleCache {
            dir: None,
            mem: Mutex::new(HashMap::new()),
        }
    }

    pub fn with_dir(dir: impl Into<PathBuf>) -> Self {
        ModuleCache {
            dir: Some(dir.into()),
            mem: Mutex::new(HashMap::new()),
        }
    }

    pub fn dir(&self) -> Option<&FsPath> {
        self.dir.as_deref()
    }

    pub fn file_for(&self, lambda: Weight) -> Option<PathBuf> {
        let n = lambda.0;
        self.dir
            .as_ref()
            .map(|d| d.join(format!("F_{}_{}_{}_{}.txt", n[0], n[1], n[2], n[3])))
    }

    fn load(&self, lambda: Weight) -> Option<Sl5Module> {
        let path = self.file_for(lambda)?;
        let text = fs::read_to_string(&path).ok()?;
        let m = deserialize(&text, lambda).ok()?;
        // a damaged file that still parses is caught by the relations check
        m.check_relations().ok()?;
        Some(m)
    }

    fn store(&self, lambda: Weight, m: &Sl5Module) -> Result<(), CacheError> {
        let Some(path) = self.file_for(lambda) else {
            return Ok(());
        };
        let dir = self.dir.as_ref().unwrap();
        fs::create_dir_all(dir)?;
        let tmp = dir.join(format!(
            ".tmp-{}-{:?}-{}",
            std::process::id(),
            std::thread::current().id(),
            path.file_name().unwrap().to_string_lossy()
        ));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(serialize(lambda, m).as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, &path)?;
        Ok(())
    }

    /// `F(λ)`, from memory, disk, or a fresh build (in that order).
    pub fn get(&self, lambda: Weight) -> Result<Arc<Sl5Module>, NotDominant> {
        if let Some(m) = self.mem.lock().unwrap().get(&lambda) {
            return Ok(m.clone());
        }
        let m = match self.load(lambda) {
            Some(m) => m,
            None => {
                let m = build_irreducible(lambda)?;
                // a failed write only costs a rebuild next time
                let _ = self.store(lambda, &m);
                m
            }
        };
        let m = Arc::new(m);
        let mut mem = self.mem.lock().unwrap();
        Ok(mem.entry(lambda).or_insert(m).clone())
    }
}

static GLOBAL: std::sync::OnceLock<ModuleCache> = std::sync::OnceLock::new();

/// Installs the process-wide cache; returns `false` if one was already set.
pub fn set_global_cache(cache: ModuleCache) -> bool {
    GLOBAL.set(cache).is_ok()
}

pub fn global_cache() -> &'static ModuleCache {
    GLOBAL.get_or_init(ModuleCache::in_memory)
}

/// `F(λ)` from the process-wide cache.
pub fn irreducible(lambda: Weight) -> Result<Arc<Sl5Module>, NotDominant> {
    global_cache().get(lambda)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let w = Weight::new(1, 1, 0, 0);
        let m = build_irreducible(w).unwrap();
        let back = deserialize(&serialize(w, &m), w).unwrap();
        assert_eq!(back, m);
    }

    #[test]
    fn rejects_other_versions() {
        let w = Weight::new(1, 0, 0, 0);
        let text = serialize(w, &build_irreducible(w).unwrap()).replace(" v1", " v0");
        assert!(matches!(deserialize(&text, w), Err(CacheError::Version(_))));
    }

    #[test]
    fn corrupted_and_stale_files_are_rebuilt() {
        let dir = std::env::temp_dir().join(format!("e510-cache-test-{}", std::process::id()));
        let w = Weight::new(0, 1, 0, 0);
        let cache = ModuleCache::with_dir(&dir);
        let fresh = cache.get(w).unwrap();
        let path = cache.file_for(w).unwrap();
        assert!(path.exists());
        fs::write(&path, "garbage").unwrap();
        assert_eq!(*ModuleCache::with_dir(&dir).get(w).unwrap(), *fresh);
        let text = fs::read_to_string(&path).unwrap();
        assert!(text.starts_with(CACHE_MAGIC));
        fs::write(&path, text.replace(" v1", " v9")).unwrap();
        assert_eq!(*ModuleCache::with_dir(&dir).get(w).unwrap(), *fresh);
        fs::remove_dir_all(&dir).unwrap();
    }
}
