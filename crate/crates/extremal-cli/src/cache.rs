//! On-disk cache of Chevalley structure constants.

use std::fs;
use std::path::{Path, PathBuf};

use extremal_lie::chevalley::{chevalley_algebra_with, ChevalleyAlgebra};
use extremal_lie::rootdata::{
    chevalley_constants, root_string_violations, CartanType, ChevalleyConstants, RootSystem,
    CONVENTION_VERSION,
};
use extremal_lie::{Result, Scalar};
use serde::{Deserialize, Serialize};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct CacheEntry {
    schema_version: u32,
    convention_version: String,
    #[serde(rename = "type")]
    ty: String,
    rank: usize,
    constants: Vec<(usize, usize, i64)>,
}

pub fn cache_dir() -> PathBuf {
    std::env::var_os("EXTREMAL_LIE_CACHE")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(".cache"))
}

fn entry_path(dir: &Path, ty: CartanType, n: usize) -> PathBuf {
    dir.join(format!("chevalley-{ty}{n}.json"))
}

/// Constants from the cache if present, current and consistent with the
/// root strings; `None` otherwise.
fn load(path: &Path, rs: &RootSystem) -> Option<ChevalleyConstants> {
    let text = fs::read_to_string(path).ok()?;
    let e: CacheEntry = serde_json::from_str(&text).ok()?;
    if e.schema_version != SCHEMA_VERSION
        || e.convention_version != CONVENTION_VERSION
        || e.ty != rs.ty.to_string()
        || e.rank != rs.rank
    {
        return None;
    }
    let c = ChevalleyConstants::from_triples(&e.constants);
    root_string_violations(rs, &c).is_empty().then_some(c)
}

fn store(path: &Path, rs: &RootSystem, c: &ChevalleyConstants) -> std::io::Result<()> {
    let entry = CacheEntry {
        schema_version: SCHEMA_VERSION,
        convention_version: CONVENTION_VERSION.to_string(),
        ty: rs.ty.to_string(),
        rank: rs.rank,
        constants: c.sorted_triples(),
    };
    let dir = path.parent().expect("cache file has a directory");
    fs::create_dir_all(dir)?;
    let tmp = dir.join(format!(".tmp-{}-{}", std::process::id(), rs.ty));
    fs::write(&tmp, serde_json::to_vec(&entry)?)?;
    fs::rename(&tmp, path)
}

/// The Chevalley algebra, with constants read from or written to the cache.
/// Cached constants are revalidated: root strings, then the Jacobi identity
/// while the algebra is built. A bad entry is recomputed and overwritten.
pub fn chevalley<S: Scalar>(ty: CartanType, n: usize) -> Result<ChevalleyAlgebra<S>> {
    let rs = RootSystem::new(ty, n)?;
    let path = entry_path(&cache_dir(), ty, n);
    if let Some(c) = load(&path, &rs) {
        if let Ok(alg) = chevalley_algebra_with(rs.clone(), c) {
            return Ok(alg);
        }
    }
    let c = chevalley_constants(&rs);
    if let Err(e) = store(&path, &rs, &c) {
        eprintln!("warning: cannot write cache {}: {e}", path.display());
    }
    chevalley_algebra_with(rs, c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use extremal_lie::Q;

    #[test]
    fn round_trip_and_corruption() {
        let dir = std::env::temp_dir().join(format!("extremal-cache-test-{}", std::process::id()));
        let rs = RootSystem::new(CartanType::G, 2).unwrap();
        let path = entry_path(&dir, CartanType::G, 2);
        let c = chevalley_constants(&rs);
        store(&path, &rs, &c).unwrap();
        let loaded = load(&path, &rs).unwrap();
        assert_eq!(loaded.sorted_triples(), c.sorted_triples());
        let a = chevalley_algebra_with::<Q>(rs.clone(), loaded).unwrap();
        assert_eq!(a.dim(), 14);

        let mut bad = c.sorted_triples();
        bad[0].2 *= 5;
        let entry = CacheEntry {
            schema_version: SCHEMA_VERSION,
            convention_version: CONVENTION_VERSION.into(),
            ty: "G".into(),
            rank: 2,
            constants: bad,
        };
        fs::write(&path, serde_json::to_vec(&entry).unwrap()).unwrap();
        assert!(load(&path, &rs).is_none());

        let stale = fs::read_to_string(&path).unwrap().replace(
            &format!("\"schema_version\":{SCHEMA_VERSION}"),
            "\"schema_version\":0",
        );
        fs::write(&path, stale).unwrap();
        assert!(load(&path, &rs).is_none());
        fs::remove_dir_all(&dir).unwrap();
    }
}
