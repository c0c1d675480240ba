//! The three subcommands.

use anyhow::{Context, Result};
use serde::Serialize;
use serde_json::json;
use trigseries_core::classifiers::{classify, ClassifyOptions, ConditionReport};
use trigseries_core::seq_model::{FamilySpec, WeightSequence};
use trigseries_core::series_eval::{convergence_curve, CurveOptions};
use trigseries_core::theorem_harness::{
    default_equivalence_corpus, verify_abel_dominance, verify_corollary_corpus,
    verify_equivalence_diagnostics, verify_lacunary_remark, verify_testpoint_probes,
    verify_theorem3_corpus, EquivalenceOptions, LacunaryOptions, TheoremId, VerificationOutcome,
};

use crate::args::{ClassifyArgs, CurveArgs, CurveFormat, TheoremArg, VerifyArgs};
use crate::input::{describe, load_target};
use crate::output::{to_json, write_console, Sink};

/// What a command wants the process exit status to reflect.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    /// A verification found a violated inequality.
    Violations,
}

#[derive(Serialize)]
struct ClassifyDocument<'a> {
    target: String,
    options: &'a serde_json::Value,
    reports: Vec<ConditionReport>,
}

pub fn run_classify(args: &ClassifyArgs, command_line: Vec<String>) -> Result<Status> {
    let (target, inputs) = load_target(&args.input)?;
    let weight: WeightSequence = args
        .weight
        .parse()
        .with_context(|| format!("cannot parse weight `{}`", args.weight))?;
    let options = ClassifyOptions {
        horizon: args.horizon,
        m_max: args.m_max,
        n0_list: args.n0.0.clone(),
        theta0: args.theta0,
        weight,
        alphas: args.alpha.0.clone(),
        ..ClassifyOptions::default()
    };
    let cfg = options.resolve(&target)?;
    let resolved = json!({
        "command": "classify",
        "target": describe(&target),
        "horizon": cfg.horizon,
        "m_min": cfg.m_min,
        "m_max": cfg.m_max,
        "n0_list": options.n0_list,
        "theta0": options.theta0,
        "weight": options.weight.to_string(),
        "alphas": options.alphas,
        "stabilization_threshold": options.stabilization_threshold,
        "decay_ratio": options.decay_ratio,
    });
    let reports = classify(&target, &options)?;
    let doc = ClassifyDocument {
        target: describe(&target),
        options: &resolved,
        reports,
    };
    let bytes = to_json(&doc)?;
    Sink {
        out: args.output.out.as_deref(),
        command_line,
        resolved,
        seed: None,
        inputs,
    }
    .emit(&bytes)?;
    Ok(Status::Ok)
}

#[derive(Serialize)]
struct CurveRow {
    n: usize,
    sup_estimate: f64,
    truncation_slack: Option<f64>,
    max_k_ck: f64,
}

pub fn run_curve(args: &CurveArgs, command_line: Vec<String>) -> Result<Status> {
    let (target, inputs) = load_target(&args.input)?;
    let options = CurveOptions {
        n_ref: args.nref,
        oversample: args.oversample,
    };
    let curve = convergence_curve(&target, &args.n.0, &options)?;
    let resolved = json!({
        "command": "curve",
        "target": describe(&target),
        "n_list": args.n.0,
        "n_ref": args.nref.map_or_else(|| json!("max(65536, 64n)"), |v| json!(v)),
        "oversample": args.oversample,
        "format": match args.format { CurveFormat::Csv => "csv", CurveFormat::Json => "json" },
    });
    let bytes = match args.format {
        CurveFormat::Json => to_json(&json!({
            "target": describe(&target),
            "curve": curve,
        }))?,
        CurveFormat::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            for e in &curve.entries {
                writer.serialize(CurveRow {
                    n: e.n,
                    sup_estimate: e.sup_estimate,
                    truncation_slack: e.truncation_slack,
                    max_k_ck: e.max_k_ck,
                })?;
            }
            writer.into_inner().map_err(|e| e.into_error())?
        }
    };
    Sink {
        out: args.output.out.as_deref(),
        command_line,
        resolved,
        seed: None,
        inputs,
    }
    .emit(&bytes)?;
    Ok(Status::Ok)
}

fn merge(theorem: TheoremId, outcomes: Vec<VerificationOutcome>) -> VerificationOutcome {
    VerificationOutcome::new(
        theorem,
        outcomes.into_iter().flat_map(|o| o.records).collect(),
    )
}

pub fn run_verify(args: &VerifyArgs, command_line: Vec<String>) -> Result<Status> {
    let (outcome, resolved) = match args.theorem {
        TheoremArg::T3 | TheoremArg::Corollary => {
            let size = args.corpus_size.unwrap_or(50);
            let outcome = if args.theorem == TheoremArg::T3 {
                verify_theorem3_corpus(args.seed, size)?
            } else {
                verify_corollary_corpus(args.seed, size)?
            };
            (
                outcome,
                json!({ "first_seed": args.seed, "corpus_size": size }),
            )
        }
        TheoremArg::Lacunary => {
            let defaults = LacunaryOptions::default();
            let options = LacunaryOptions {
                horizon: args.horizon.unwrap_or(defaults.horizon),
                n0_list: args.n0.as_ref().map_or(defaults.n0_list, |l| l.0.clone()),
                n_list: args.n.as_ref().map_or(defaults.n_list, |l| l.0.clone()),
                oversample: args.oversample,
            };
            let alphas = args.alpha.as_ref().map_or(vec![1.0], |a| a.0.clone());
            let outcomes = alphas
                .iter()
                .map(|&a| verify_lacunary_remark(a, &options))
                .collect::<trigseries_core::Result<Vec<_>>>()?;
            let resolved = json!({
                "alphas": alphas,
                "horizon": options.horizon,
                "n0_list": options.n0_list,
                "n_list": options.n_list,
                "oversample": options.oversample,
            });
            (merge(TheoremId::LacunaryRemark, outcomes), resolved)
        }
        TheoremArg::Equivalence => {
            let defaults = EquivalenceOptions::default();
            let options = EquivalenceOptions {
                horizon: args.horizon.unwrap_or(defaults.horizon),
                n0_list: args.n0.as_ref().map_or(defaults.n0_list, |l| l.0.clone()),
                n_list: args.n.as_ref().map_or(defaults.n_list, |l| l.0.clone()),
                curve: CurveOptions {
                    n_ref: None,
                    oversample: args.oversample,
                },
                threshold: defaults.threshold,
            };
            let corpus: Vec<FamilySpec> = if args.families.is_empty() {
                default_equivalence_corpus()
            } else {
                args.families
                    .iter()
                    .map(|f| {
                        f.parse()
                            .with_context(|| format!("cannot parse family `{}`", f))
                    })
                    .collect::<Result<_>>()?
            };
            let resolved = json!({
                "corpus": corpus.iter().map(|f| f.to_string()).collect::<Vec<_>>(),
                "horizon": options.horizon,
                "n0_list": options.n0_list,
                "n_list": options.n_list,
                "oversample": options.curve.oversample,
                "threshold": options.threshold,
            });
            (verify_equivalence_diagnostics(&corpus, &options)?, resolved)
        }
        TheoremArg::T1Sufficiency => {
            let count = args.corpus_size.unwrap_or(100);
            (
                verify_abel_dominance(args.seed, count)?,
                json!({ "seed": args.seed, "count": count }),
            )
        }
        TheoremArg::T1Necessity => {
            let count = args.corpus_size.unwrap_or(20);
            let outcome = verify_testpoint_probes(args.seed, count, args.oversample)?;
            (
                outcome,
                json!({ "first_seed": args.seed, "count": count, "oversample": args.oversample }),
            )
        }
    };
    let mut resolved = resolved;
    resolved["command"] = json!("verify");
    resolved["theorem"] = json!(outcome.theorem.to_string());

    let bytes = to_json(&outcome)?;
    let wrote_file = Sink {
        out: args.output.out.as_deref(),
        command_line,
        resolved,
        seed: Some(args.seed),
        inputs: Vec::new(),
    }
    .emit(&bytes)?;
    // the table goes wherever the JSON does not
    write_console(outcome.to_string().as_bytes(), !wrote_file)?;
    Ok(if outcome.all_hold() {
        Status::Ok
    } else {
        Status::Violations
    })
}
