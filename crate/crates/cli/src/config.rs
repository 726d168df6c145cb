use std::fs;
use std::path::{Path, PathBuf};

use schensted_core::{BuiltinScheme, BumpingScheme, SchemeTable, TableScheme};

use crate::CliError;

/// Largest `n` accepted by subcommands that enumerate all of `S_n`.
pub const HARD_CAP: usize = 8;
pub const DEFAULT_N_MAX: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputMode {
    Text,
    Json,
}

#[derive(Debug, Clone)]
pub struct CliConfig {
    pub scheme: Option<String>,
    pub output: OutputMode,
    pub n_max: usize,
    pub golden_dir: Option<PathBuf>,
    pub bless: bool,
}

impl CliConfig {
    pub fn scheme_spec(&self) -> &str {
        self.scheme.as_deref().unwrap_or("row")
    }

    pub fn scheme(&self) -> Result<Box<dyn BumpingScheme>, CliError> {
        resolve_scheme(self.scheme_spec())
    }
}

/// Resolves `row`, `column`, `reversing`, `random:<seed>` or `table:<path>`.
pub fn resolve_scheme(spec: &str) -> Result<Box<dyn BumpingScheme>, CliError> {
    if let Some(path) = spec.strip_prefix("table:") {
        let table = read_table(Path::new(path))?;
        return Ok(Box::new(TableScheme::new(table)?));
    }
    let builtin: BuiltinScheme = spec.parse()?;
    Ok(builtin.build())
}

pub fn read_table(path: &Path) -> Result<SchemeTable, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

pub fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}
