//! Result files and their run manifests.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use serde::Serialize;

use crate::input::{sha256_hex, InputDigest};

/// Everything needed to reproduce an output file. Contains no timestamps or
/// host details, so identical runs give byte-identical manifests.
#[derive(Debug, Clone, Serialize)]
pub struct RunManifest {
    pub tool: &'static str,
    pub version: &'static str,
    /// Arguments after the program name.
    pub command_line: Vec<String>,
    /// Every default and flag after resolution.
    pub resolved: serde_json::Value,
    pub seed: Option<u64>,
    pub inputs: Vec<InputDigest>,
    pub output: OutputDigest,
}

#[derive(Debug, Clone, Serialize)]
pub struct OutputDigest {
    pub path: String,
    pub sha256: String,
}

/// The sidecar path `<out>.manifest.json`.
pub fn manifest_path(out: &Path) -> PathBuf {
    let mut name = out.as_os_str().to_owned();
    name.push(".manifest.json");
    PathBuf::from(name)
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<Vec<u8>> {
    let mut bytes = serde_json::to_vec_pretty(value)?;
    bytes.push(b'\n');
    Ok(bytes)
}

/// Writes to stdout or stderr; a closed pipe (`| head`) is not an error.
pub fn write_console(bytes: &[u8], to_stderr: bool) -> Result<()> {
    let result = if to_stderr {
        std::io::stderr().lock().write_all(bytes)
    } else {
        std::io::stdout().lock().write_all(bytes)
    };
    match result {
        Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => Ok(other?),
    }
}

/// Where a command's primary result goes.
pub struct Sink<'a> {
    pub out: Option<&'a Path>,
    pub command_line: Vec<String>,
    pub resolved: serde_json::Value,
    pub seed: Option<u64>,
    pub inputs: Vec<InputDigest>,
}

impl Sink<'_> {
    /// Writes `bytes` to the output file plus manifest, or to stdout.
    /// Returns whether a file was written.
    pub fn emit(self, bytes: &[u8]) -> Result<bool> {
        let Some(out) = self.out else {
            write_console(bytes, false)?;
            return Ok(false);
        };
        fs::write(out, bytes).with_context(|| format!("cannot write {}", out.display()))?;
        let manifest = RunManifest {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            command_line: self.command_line,
            resolved: self.resolved,
            seed: self.seed,
            inputs: self.inputs,
            output: OutputDigest {
                path: out.display().to_string(),
                sha256: sha256_hex(bytes),
            },
        };
        let path = manifest_path(out);
        fs::write(&path, to_json(&manifest)?)
            .with_context(|| format!("cannot write {}", path.display()))?;
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sidecar_names() {
        assert_eq!(
            manifest_path(Path::new("out/curve.csv")),
            PathBuf::from("out/curve.csv.manifest.json")
        );
    }
}
