//! On-disk cache of computed results, one JSON record per (command, parameters).

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

/// Bump when the payload format changes; older records are then ignored.
pub const CACHE_VERSION: u32 = 1;

pub const CACHE_DIR_VAR: &str = "SPINGRASS_CACHE_DIR";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CacheRecord {
    pub version: u32,
    pub command: String,
    pub params: String,
    pub payload: String,
    /// Hex SHA-256 of `payload`.
    pub checksum: String,
}

fn sha256_hex(data: &[u8]) -> String {
    Sha256::digest(data).iter().map(|b| format!("{b:02x}")).collect()
}

impl CacheRecord {
    pub fn new(command: &str, params: &str, payload: String) -> Self {
        CacheRecord {
            version: CACHE_VERSION,
            command: command.to_owned(),
            params: params.to_owned(),
            checksum: sha256_hex(payload.as_bytes()),
            payload,
        }
    }

    pub fn is_valid(&self) -> bool {
        self.version == CACHE_VERSION && self.checksum == sha256_hex(self.payload.as_bytes())
    }
}

#[derive(Clone, Debug)]
pub struct Cache {
    dir: PathBuf,
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$SPINGRASS_CACHE_DIR`, else `$XDG_CACHE_HOME/spingrass`, else `~/.cache/spingrass`.
    pub fn default_dir() -> Option<PathBuf> {
        if let Some(d) = std::env::var_os(CACHE_DIR_VAR) {
            return Some(PathBuf::from(d));
        }
        if let Some(d) = std::env::var_os("XDG_CACHE_HOME") {
            return Some(PathBuf::from(d).join("spingrass"));
        }
        std::env::var_os("HOME").map(|h| PathBuf::from(h).join(".cache").join("spingrass"))
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, command: &str, params: &str) -> PathBuf {
        let key = sha256_hex(format!("{command}\0{params}").as_bytes());
        self.dir.join(format!("{}.json", &key[..32]))
    }

    /// The cached payload, if a valid record for exactly this key exists.
    pub fn load(&self, command: &str, params: &str) -> Option<String> {
        let text = fs::read_to_string(self.path_for(command, params)).ok()?;
        let rec: CacheRecord = serde_json::from_str(&text).ok()?;
        (rec.is_valid() && rec.command == command && rec.params == params).then_some(rec.payload)
    }

    /// Writes the record to a temporary file and renames it into place.
    pub fn store(&self, command: &str, params: &str, payload: String) -> io::Result<()> {
        fs::create_dir_all(&self.dir)?;
        let rec = CacheRecord::new(command, params, payload);
        let nanos = SystemTime::now()
            .duration_since(UNIX_EPOCH)
            .map(|d| d.as_nanos())
            .unwrap_or(0);
        let tmp = self
            .dir
            .join(format!(".tmp-{}-{nanos}", std::process::id()));
        {
            let mut f = fs::File::create(&tmp)?;
            f.write_all(serde_json::to_string(&rec)?.as_bytes())?;
            f.sync_all()?;
        }
        fs::rename(&tmp, self.path_for(command, params))
    }
}
