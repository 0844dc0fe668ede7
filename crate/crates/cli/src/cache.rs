use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};

pub const CACHE_ENV: &str = "MCKAY_CACHE_DIR";

/// Content-addressed store of rendered command output. Entries are written
/// to a temporary file and renamed into place.
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn from_env() -> Option<Cache> {
        let dir = std::env::var_os(CACHE_ENV)?;
        Some(Cache { dir: PathBuf::from(dir) })
    }

    pub fn key(material: &str) -> String {
        hex::encode(Sha256::digest(material.as_bytes()))
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.out"))
    }

    pub fn get(&self, key: &str) -> Option<Vec<u8>> {
        fs::read(self.path(key)).ok()
    }

    pub fn put(&self, key: &str, bytes: &[u8]) -> std::io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let tmp = self.dir.join(format!(".{key}.{}.tmp", std::process::id()));
        write_all(&tmp, bytes)?;
        fs::rename(&tmp, self.path(key))
    }
}

fn write_all(path: &Path, bytes: &[u8]) -> std::io::Result<()> {
    let mut f = fs::File::create(path)?;
    f.write_all(bytes)?;
    f.sync_all()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        let dir = tempfile::tempdir().unwrap();
        let cache = Cache { dir: dir.path().join("c") };
        let k = Cache::key("enumerate|5|5");
        assert_eq!(k.len(), 64);
        assert!(cache.get(&k).is_none());
        cache.put(&k, b"abc").unwrap();
        assert_eq!(cache.get(&k).unwrap(), b"abc");
        assert_eq!(fs::read_dir(&cache.dir).unwrap().count(), 1);
    }
}
