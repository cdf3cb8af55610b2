//! On-disk cache of emitted documents, keyed by command, payload and
//! artifact version.

use std::path::{Path, PathBuf};

use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::CliResult;
use crate::VERSION;

/// Hex SHA-256 of the command, the canonical payload text and the version.
/// `serde_json` maps keep their keys sorted, so the text is canonical.
pub fn key(command: &str, payload: &Value) -> String {
    let mut h = Sha256::new();
    h.update(command.as_bytes());
    h.update(b"\n");
    h.update(payload.to_string().as_bytes());
    h.update(b"\n");
    h.update(VERSION.as_bytes());
    hex::encode(h.finalize())
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: &Path) -> CliResult<Self> {
        std::fs::create_dir_all(dir)?;
        Ok(Cache { dir: dir.to_path_buf() })
    }

    fn path(&self, key: &str) -> PathBuf {
        self.dir.join(format!("{key}.json"))
    }

    pub fn get(&self, key: &str) -> Option<String> {
        std::fs::read_to_string(self.path(key)).ok()
    }

    /// Writes through a temporary file so readers never see a partial entry.
    pub fn put(&self, key: &str, doc: &str) -> CliResult<()> {
        let tmp = self.dir.join(format!("{key}.{}.tmp", std::process::id()));
        std::fs::write(&tmp, doc)?;
        std::fs::rename(&tmp, self.path(key))?;
        Ok(())
    }
}
