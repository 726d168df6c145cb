//! Golden files: `--bless` writes an output under the golden directory,
//! later runs compare against it.

use std::fs;
use std::path::Path;

use crate::CliError;

/// File name for a golden output, built from the subcommand and its inputs.
pub fn file_name(parts: &[&str], json: bool) -> String {
    let slug: Vec<String> = parts
        .iter()
        .map(|p| p.chars().map(|c| if c.is_ascii_alphanumeric() { c } else { '_' }).collect())
        .collect();
    format!("{}.{}", slug.join("__"), if json { "json" } else { "txt" })
}

pub fn check_or_bless(dir: &Path, name: &str, output: &str, bless: bool) -> Result<(), CliError> {
    let path = dir.join(name);
    if bless {
        fs::create_dir_all(dir).map_err(|e| CliError::Input(format!("{}: {e}", dir.display())))?;
        fs::write(&path, output).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        return Ok(());
    }
    let expected = fs::read_to_string(&path).map_err(|_| {
        CliError::Failed(format!("no golden file {}; rerun with --bless", path.display()))
    })?;
    if expected != output {
        return Err(CliError::Failed(format!("output differs from golden file {}", path.display())));
    }
    Ok(())
}
