//! Command-line definitions and list-valued flag parsing.

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "trigseries",
    version,
    about = "Sequence-condition classifiers and uniform-convergence diagnostics for trigonometric series"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run every applicable condition checker on a coefficient sequence.
    Classify(ClassifyArgs),
    /// Tail sup-norm estimates against max k|c_k| on a list of n.
    Curve(CurveArgs),
    /// Run a corpus-level verification harness.
    Verify(VerifyArgs),
}

/// Where the coefficients come from.
#[derive(Debug, Args)]
pub struct InputArgs {
    /// Family spec such as `harmonic(1.0)`, `lacunary(0.5)` or
    /// `explicit:[1,0.5,0.25]`; omitted when `--input` is given.
    pub spec: Option<String>,
    /// Explicit sequence file: one term per line, `re` or `re,im`, starting
    /// at n = 1; `#` starts a comment.
    #[arg(long, value_name = "FILE", conflicts_with = "spec")]
    pub input: Option<PathBuf>,
    /// Coefficients c_{-n} of a two-sided series (spec text or `@FILE`);
    /// without it the input is a sine series.
    #[arg(long, value_name = "SPEC")]
    pub neg: Option<String>,
}

#[derive(Debug, Args)]
pub struct OutputArgs {
    /// Write the result here and a `<FILE>.manifest.json` sidecar next to it.
    #[arg(long, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ClassifyArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Truncation horizon N (terms 1..=N+1 are read); defaults to 2^20 for
    /// generators and the data length minus one for explicit input.
    #[arg(long)]
    pub horizon: Option<usize>,
    /// Largest m for per-m ratios; defaults to N/4.
    #[arg(long)]
    pub m_max: Option<usize>,
    /// Window widths scanned for the group condition.
    #[arg(long, value_name = "LIST", default_value = "1,2,4,8,16", value_parser = parse_usize_list)]
    pub n0: UsizeList,
    /// Sector half-angle in radians.
    #[arg(long, default_value_t = 0.0)]
    pub theta0: f64,
    /// Weight R(n): `one`, `power(b)`, `log`, `exp2`.
    #[arg(long, value_name = "R-SPEC", default_value = "one")]
    pub weight: String,
    /// Quasimonotonicity exponents.
    #[arg(long, value_name = "LIST", default_value = "1.0", value_parser = parse_real_list)]
    pub alpha: RealList,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CurveFormat {
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct CurveArgs {
    #[command(flatten)]
    pub input: InputArgs,
    /// Values of n: `64,256,1024`, `64..4096:dyadic` or `lo..hi:step`.
    #[arg(long, value_name = "LIST", value_parser = parse_n_list)]
    pub n: UsizeList,
    /// Fixed reference horizon; defaults to max(2^16, 64 n) per row.
    #[arg(long)]
    pub nref: Option<usize>,
    /// Grid points per 1/n near the origin.
    #[arg(long, default_value_t = 8)]
    pub oversample: usize,
    #[arg(long, value_enum, default_value_t = CurveFormat::Csv)]
    pub format: CurveFormat,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TheoremArg {
    /// Weighted rest variation implies group variation, on the seeded corpus.
    T3,
    /// Sector quasimonotone sequences, on the seeded corpus.
    Corollary,
    /// The lacunary counterexample.
    Lacunary,
    /// Coefficient/tail trend consistency on a family list.
    Equivalence,
    /// Abel and low-frequency tail estimates on random triples.
    T1Sufficiency,
    /// The test-point probe on constructed sector instances.
    T1Necessity,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(value_enum)]
    pub theorem: TheoremArg,
    /// First corpus seed.
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Number of corpus members (or random instances).
    #[arg(long)]
    pub corpus_size: Option<usize>,
    /// Lacunary exponents.
    #[arg(long, value_name = "LIST", value_parser = parse_real_list)]
    pub alpha: Option<RealList>,
    /// Horizon for the lacunary and equivalence scans.
    #[arg(long)]
    pub horizon: Option<usize>,
    /// Window widths for the group condition.
    #[arg(long, value_name = "LIST", value_parser = parse_usize_list)]
    pub n0: Option<UsizeList>,
    /// Curve n values for the lacunary and equivalence harnesses.
    #[arg(long, value_name = "LIST", value_parser = parse_n_list)]
    pub n: Option<UsizeList>,
    #[arg(long, default_value_t = 8)]
    pub oversample: usize,
    /// Families for the equivalence harness (repeatable).
    #[arg(long = "family", value_name = "SPEC")]
    pub families: Vec<String>,
    #[command(flatten)]
    pub output: OutputArgs,
}

/// Parsed `usize` list; a newtype so clap keeps it as one value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UsizeList(pub Vec<usize>);

#[derive(Debug, Clone, PartialEq)]
pub struct RealList(pub Vec<f64>);

fn parse_usize_list(text: &str) -> Result<UsizeList, String> {
    let values = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<usize>()
                .map_err(|e| format!("`{}`: {}", t.trim(), e))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if values.is_empty() || values.contains(&0) {
        return Err("expected positive integers".into());
    }
    Ok(UsizeList(values))
}

fn parse_real_list(text: &str) -> Result<RealList, String> {
    let values = text
        .split(',')
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|e| format!("`{}`: {}", t.trim(), e))
        })
        .collect::<Result<Vec<_>, _>>()?;
    if values.iter().any(|v| !v.is_finite()) {
        return Err("expected finite numbers".into());
    }
    Ok(RealList(values))
}

/// `a,b,c`, `lo..hi:dyadic` (powers of two times `lo`) or `lo..hi:step`.
pub fn parse_n_list(text: &str) -> Result<UsizeList, String> {
    let Some((lo, rest)) = text.split_once("..") else {
        return parse_usize_list(text);
    };
    let (hi, mode) = rest.split_once(':').unwrap_or((rest, "1"));
    let lo: usize = lo.trim().parse().map_err(|e| format!("`{}`: {}", lo, e))?;
    let hi: usize = hi.trim().parse().map_err(|e| format!("`{}`: {}", hi, e))?;
    if lo == 0 || hi < lo {
        return Err(format!("range `{}` must satisfy 1 <= lo <= hi", text));
    }
    let values = match mode.trim() {
        "dyadic" => std::iter::successors(Some(lo), |&n| n.checked_mul(2))
            .take_while(|&n| n <= hi)
            .collect(),
        step => {
            let step: usize = step
                .parse()
                .map_err(|_| format!("unknown range mode `{}`", step))?;
            if step == 0 {
                return Err("range step must be positive".into());
            }
            (lo..=hi).step_by(step).collect()
        }
    };
    Ok(UsizeList(values))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n_lists() {
        assert_eq!(
            parse_n_list("64..4096:dyadic").unwrap().0,
            vec![64, 128, 256, 512, 1024, 2048, 4096]
        );
        assert_eq!(
            parse_n_list("64..4000:dyadic").unwrap().0.last(),
            Some(&2048)
        );
        assert_eq!(parse_n_list("1..10:3").unwrap().0, vec![1, 4, 7, 10]);
        assert_eq!(parse_n_list("3..5").unwrap().0, vec![3, 4, 5]);
        assert_eq!(parse_n_list("8, 16").unwrap().0, vec![8, 16]);
        assert!(parse_n_list("0..4:dyadic").is_err());
        assert!(parse_n_list("8..4").is_err());
        assert!(parse_n_list("1..4:fast").is_err());
        assert!(parse_n_list("0").is_err());
    }

    #[test]
    fn real_lists() {
        assert_eq!(parse_real_list("0.5,1,2").unwrap().0, vec![0.5, 1.0, 2.0]);
        assert!(parse_real_list("1,inf").is_err());
        assert!(parse_real_list("x").is_err());
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
