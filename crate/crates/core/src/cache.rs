//! Content-addressed store for computed tables.

use std::fs;
use std::io::{self, Write as _};
use std::path::{Path, PathBuf};

use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::table::{InvariantTable, TableError, SCHEMA_VERSION};

/// Bumped whenever a multiplicity formula changes, invalidating old entries.
pub const CONVENTION_VERSION: u32 = 1;

pub const CACHE_ENV: &str = "REAL_ENUM_CACHE";

#[derive(Debug, Error)]
pub enum CacheError {
    #[error("cache i/o at {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("corrupt cache entry {path}: {source}")]
    Corrupt { path: PathBuf, source: TableError },
    #[error("no cache directory: set {CACHE_ENV} or HOME")]
    NoDirectory,
}

/// What a cached table was computed from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CacheKey {
    pub surface: String,
    pub class: Vec<i64>,
    pub operation: String,
}

impl CacheKey {
    pub fn new(surface: impl Into<String>, class: &[i64], operation: impl Into<String>) -> Self {
        CacheKey {
            surface: surface.into(),
            class: class.to_vec(),
            operation: operation.into(),
        }
    }

    pub fn digest(&self) -> String {
        let class: Vec<String> = self.class.iter().map(|c| c.to_string()).collect();
        let text = format!(
            "schema={SCHEMA_VERSION}|{}|{}|{}|convention={CONVENTION_VERSION}",
            self.surface,
            class.join(","),
            self.operation
        );
        hex::encode(Sha256::digest(text.as_bytes()))
    }
}

#[derive(Debug, Clone)]
pub struct Cache {
    dir: PathBuf,
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CacheError + '_ {
    move |source| CacheError::Io {
        path: path.to_path_buf(),
        source,
    }
}

impl Cache {
    pub fn new(dir: impl Into<PathBuf>) -> Self {
        Cache { dir: dir.into() }
    }

    /// `$REAL_ENUM_CACHE`, else `$XDG_CACHE_HOME/real-enum`, else
    /// `$HOME/.cache/real-enum`.
    pub fn default_dir() -> Result<PathBuf, CacheError> {
        let var = |name| std::env::var_os(name).filter(|v| !v.is_empty()).map(PathBuf::from);
        if let Some(dir) = var(CACHE_ENV) {
            return Ok(dir);
        }
        if let Some(dir) = var("XDG_CACHE_HOME") {
            return Ok(dir.join("real-enum"));
        }
        var("HOME")
            .map(|home| home.join(".cache").join("real-enum"))
            .ok_or(CacheError::NoDirectory)
    }

    pub fn dir(&self) -> &Path {
        &self.dir
    }

    pub fn path_for(&self, key: &CacheKey) -> PathBuf {
        self.dir.join(format!("{}.json", key.digest()))
    }

    pub fn get(&self, key: &CacheKey) -> Result<Option<InvariantTable>, CacheError> {
        let path = self.path_for(key);
        match fs::read_to_string(&path) {
            Ok(text) => InvariantTable::from_json(&text)
                .map(Some)
                .map_err(|source| CacheError::Corrupt { path, source }),
            Err(e) if e.kind() == io::ErrorKind::NotFound => Ok(None),
            Err(e) => Err(io_err(&path)(e)),
        }
    }

    /// Writes to a temporary file in the cache directory and renames it into
    /// place, so readers never see a partial entry.
    pub fn put(&self, key: &CacheKey, table: &InvariantTable) -> Result<PathBuf, CacheError> {
        self.put_named(&key.digest(), table)
    }

    /// Stores a table under a digest of its own contents.
    pub fn put_table(&self, table: &InvariantTable) -> Result<PathBuf, CacheError> {
        let digest = hex::encode(Sha256::digest(table.to_json().as_bytes()));
        self.put_named(&digest, table)
    }

    fn put_named(&self, digest: &str, table: &InvariantTable) -> Result<PathBuf, CacheError> {
        fs::create_dir_all(&self.dir).map_err(io_err(&self.dir))?;
        let path = self.dir.join(format!("{digest}.json"));
        let tmp = self
            .dir
            .join(format!(".{digest}.{}.tmp", std::process::id()));
        let mut file = fs::File::create(&tmp).map_err(io_err(&tmp))?;
        file.write_all(table.to_json().as_bytes()).map_err(io_err(&tmp))?;
        file.sync_all().map_err(io_err(&tmp))?;
        fs::rename(&tmp, &path).map_err(io_err(&path))?;
        Ok(path)
    }

    /// Cached entries, sorted by file name.
    pub fn list(&self) -> Result<Vec<(PathBuf, InvariantTable)>, CacheError> {
        let mut out = Vec::new();
        for path in self.entry_paths()? {
            let text = fs::read_to_string(&path).map_err(io_err(&path))?;
            let table = InvariantTable::from_json(&text)
                .map_err(|source| CacheError::Corrupt { path: path.clone(), source })?;
            out.push((path, table));
        }
        Ok(out)
    }

    /// Removes every entry and returns how many there were.
    pub fn clear(&self) -> Result<usize, CacheError> {
        let paths = self.entry_paths()?;
        for path in &paths {
            fs::remove_file(path).map_err(io_err(path))?;
        }
        Ok(paths.len())
    }

    fn entry_paths(&self) -> Result<Vec<PathBuf>, CacheError> {
        let entries = match fs::read_dir(&self.dir) {
            Ok(entries) => entries,
            Err(e) if e.kind() == io::ErrorKind::NotFound => return Ok(Vec::new()),
            Err(e) => return Err(io_err(&self.dir)(e)),
        };
        let mut paths = Vec::new();
        for entry in entries {
            let path = entry.map_err(io_err(&self.dir))?.path();
            let is_entry = path.extension().is_some_and(|e| e == "json")
                && !path
                    .file_name()
                    .and_then(|n| n.to_str())
                    .is_some_and(|n| n.starts_with('.'));
            if is_entry {
                paths.push(path);
            }
        }
        paths.sort();
        Ok(paths)
    }
}
