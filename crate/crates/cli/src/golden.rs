//! Golden values: Hilbert tables and elimination verdicts keyed by
//! `(m, n, k, f, field)`.

use std::collections::BTreeMap;
use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

pub const FILE_NAME: &str = "golden.json";

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Provenance {
    pub generator: String,
    pub version: String,
    pub grid: String,
    pub fields: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EliminationVerdict {
    pub base: [bool; 3],
    pub unprojection: [bool; 3],
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GoldenFile {
    pub provenance: Provenance,
    pub hilbert: BTreeMap<String, Vec<u64>>,
    pub eliminations: BTreeMap<String, EliminationVerdict>,
}

pub fn key(m: usize, n: usize, k: u32, f: &str, field: &str) -> String {
    format!("m={m} n={n} k={k} f={f} field={field}")
}

pub fn default_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden")
}

/// A missing file reads as empty.
pub fn load(dir: &Path) -> Result<GoldenFile, String> {
    let path = dir.join(FILE_NAME);
    match fs::read_to_string(&path) {
        Ok(text) => serde_json::from_str(&text).map_err(|e| format!("{}: {e}", path.display())),
        Err(e) if e.kind() == std::io::ErrorKind::NotFound => Ok(GoldenFile::default()),
        Err(e) => Err(format!("{}: {e}", path.display())),
    }
}

pub fn save(dir: &Path, golden: &GoldenFile) -> Result<(), String> {
    fs::create_dir_all(dir).map_err(|e| format!("{}: {e}", dir.display()))?;
    let path = dir.join(FILE_NAME);
    let text = serde_json::to_string_pretty(golden).map_err(|e| e.to_string())? + "\n";
    fs::write(&path, text).map_err(|e| format!("{}: {e}", path.display()))
}
