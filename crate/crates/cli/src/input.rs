//! Coefficient input: family specs, inline lists and explicit sequence files.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use serde::Serialize;
use sha2::{Digest, Sha256};
use trigseries_core::seq_model::{CoefficientSequence, Target, TwoSidedSequence};
use trigseries_core::Complex;

use crate::args::InputArgs;

/// An input file and the SHA-256 of its bytes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

pub fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{:02x}", b))
        .collect()
}

/// Parses an explicit sequence file: one term per line, `re` or `re,im`,
/// first line is `n = 1`. Blank lines and `#` comments are skipped.
pub fn parse_sequence_text(text: &str) -> Result<Vec<Complex>> {
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .flexible(true)
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut values = Vec::new();
    for record in reader.records() {
        let record = record.context("malformed sequence file")?;
        let line = record.position().map_or(0, |p| p.line());
        let fields: Vec<&str> = record.iter().collect();
        let number = |s: &str| -> Result<f64> {
            let v: f64 = s
                .parse()
                .with_context(|| format!("line {}: `{}` is not a number", line, s))?;
            if !v.is_finite() {
                bail!("line {}: `{}` is not finite", line, s);
            }
            Ok(v)
        };
        match fields.as_slice() {
            [] | [""] => continue,
            [re] => values.push(Complex::new(number(re)?, 0.0)),
            [re, im] => values.push(Complex::new(number(re)?, number(im)?)),
            _ => bail!(
                "line {}: expected `re` or `re,im`, got {} fields",
                line,
                fields.len()
            ),
        }
    }
    if values.is_empty() {
        bail!("sequence file has no terms");
    }
    Ok(values)
}

fn read_file(path: &Path, digests: &mut Vec<InputDigest>) -> Result<CoefficientSequence> {
    let bytes = fs::read(path).with_context(|| format!("cannot read {}", path.display()))?;
    digests.push(InputDigest {
        path: path.display().to_string(),
        sha256: sha256_hex(&bytes),
    });
    let text =
        String::from_utf8(bytes).with_context(|| format!("{} is not UTF-8", path.display()))?;
    let values = parse_sequence_text(&text).with_context(|| format!("in {}", path.display()))?;
    Ok(CoefficientSequence::explicit(values)?)
}

/// A spec string, or `@FILE` for an explicit sequence file.
fn sequence_from(text: &str, digests: &mut Vec<InputDigest>) -> Result<CoefficientSequence> {
    match text.strip_prefix('@') {
        Some(path) => read_file(&PathBuf::from(path), digests),
        None => text
            .parse::<CoefficientSequence>()
            .with_context(|| format!("cannot parse sequence `{}`", text)),
    }
}

/// The target described by the input flags, and digests of any files read.
pub fn load_target(args: &InputArgs) -> Result<(Target, Vec<InputDigest>)> {
    let mut digests = Vec::new();
    let pos = match (&args.spec, &args.input) {
        (_, Some(path)) => read_file(path, &mut digests)?,
        (Some(spec), None) => sequence_from(spec, &mut digests)?,
        (None, None) => bail!("give a sequence spec or --input FILE"),
    };
    let target = match &args.neg {
        None => Target::Sine(pos),
        Some(neg) => {
            let neg = sequence_from(neg, &mut digests)?;
            Target::TwoSided(TwoSidedSequence::new(Complex::default(), pos, neg)?)
        }
    };
    Ok((target, digests))
}

/// Human-readable description of a target for reports.
pub fn describe(target: &Target) -> String {
    match target {
        Target::Sine(b) => format!("sine:{}", b),
        Target::TwoSided(ts) => format!("two_sided:pos={},neg={}", ts.pos, ts.neg),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sequence_files() {
        let v = parse_sequence_text("# header\n1\n0.5, -0.25\n\n  2e-1 \n").unwrap();
        assert_eq!(
            v,
            vec![
                Complex::new(1.0, 0.0),
                Complex::new(0.5, -0.25),
                Complex::new(0.2, 0.0)
            ]
        );
        assert!(parse_sequence_text("1,2,3\n").is_err());
        assert!(parse_sequence_text("x\n").is_err());
        assert!(parse_sequence_text("nan\n").is_err());
        assert!(parse_sequence_text("# nothing\n").is_err());
    }

    #[test]
    fn digests() {
        assert_eq!(
            sha256_hex(b"abc"),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad"
        );
    }
}
