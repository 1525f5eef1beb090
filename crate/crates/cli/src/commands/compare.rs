use std::io::Write;
use std::process::ExitCode;

use clap::ValueEnum;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use tenrec::equivalence::{compare_with_oracle, EquivalenceReport, Verdict};
use tenrec::sampling::{random_constant_instance, random_periodic_instance, random_table_instance, Instance};
use tenrec::{CoefficientSequence, InitialConditions, Rational};

use crate::config::{ConfigArgs, ExperimentConfig, Format};
use crate::output::{exit, EXIT_MISMATCH};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TrialKind {
    /// Constant (A, B)
    Constant,
    /// Period-2 coefficient sequence
    Periodic,
    /// Tabulated coefficients, one row per index
    Table,
}

struct Trial {
    id: usize,
    first_label: i64,
    ics: InitialConditions,
    coeffs: CoefficientSequence,
    report: EquivalenceReport,
}

#[derive(Serialize)]
struct MismatchJson {
    n: i64,
    formula: &'static str,
    oracle: Option<Rational>,
    closed: Option<Rational>,
}

#[derive(Serialize)]
struct TrialJson<'a> {
    trial: usize,
    coefficients: &'a CoefficientSequence,
    initial_conditions: &'a InitialConditions,
    truncated_at: Option<i64>,
    exact_equal: usize,
    mismatch: usize,
    skipped_forbidden: usize,
    mismatches: Vec<MismatchJson>,
}

#[derive(Serialize)]
struct CompareJson<'a> {
    seed: Option<u64>,
    horizon: usize,
    trials: Vec<TrialJson<'a>>,
}

fn coefficient_label(c: &CoefficientSequence) -> (String, String) {
    match c.as_constant() {
        Some((a, b)) => (a.to_string(), b.to_string()),
        None => match c {
            CoefficientSequence::Periodic { pairs } => (format!("periodic({})", pairs.len()), String::new()),
            _ => ("table".into(), String::new()),
        },
    }
}

fn emit(
    trials: &[Trial],
    seed: Option<u64>,
    horizon: usize,
    format: Format,
    summary: bool,
    out: &mut dyn Write,
) -> anyhow::Result<()> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            if summary {
                w.write_record(["trial", "A", "B", "exact_equal", "mismatch", "skipped_forbidden"])?;
                for t in trials {
                    let (a, b) = coefficient_label(&t.coeffs);
                    w.write_record([
                        t.id.to_string(),
                        a,
                        b,
                        t.report.count(Verdict::ExactEqual).to_string(),
                        t.report.count(Verdict::Mismatch).to_string(),
                        t.report.count(Verdict::SkippedForbidden).to_string(),
                    ])?;
                }
            } else {
                w.write_record(["trial", "n", "formula", "verdict"])?;
                for t in trials {
                    for v in &t.report.verdicts {
                        w.write_record([
                            t.id.to_string(),
                            (t.first_label + v.index as i64).to_string(),
                            v.formula.name().to_string(),
                            v.verdict.name().to_string(),
                        ])?;
                    }
                }
            }
            w.flush()?;
        }
        Format::Json => {
            let doc = CompareJson {
                seed,
                horizon,
                trials: trials
                    .iter()
                    .map(|t| TrialJson {
                        trial: t.id,
                        coefficients: &t.coeffs,
                        initial_conditions: &t.ics,
                        truncated_at: t.report.truncated_at.map(|i| t.first_label + i as i64),
                        exact_equal: t.report.count(Verdict::ExactEqual),
                        mismatch: t.report.count(Verdict::Mismatch),
                        skipped_forbidden: t.report.count(Verdict::SkippedForbidden),
                        mismatches: t
                            .report
                            .verdicts
                            .iter()
                            .filter(|v| v.verdict == Verdict::Mismatch)
                            .map(|v| MismatchJson {
                                n: t.first_label + v.index as i64,
                                formula: v.formula.name(),
                                oracle: v.oracle.clone(),
                                closed: v.closed.clone(),
                            })
                            .collect(),
                    })
                    .collect(),
            };
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn finish(trials: &[Trial]) -> ExitCode {
    let mismatches: usize = trials.iter().map(|t| t.report.count(Verdict::Mismatch)).sum();
    let equal: usize = trials.iter().map(|t| t.report.count(Verdict::ExactEqual)).sum();
    let skipped: usize = trials.iter().map(|t| t.report.count(Verdict::SkippedForbidden)).sum();
    eprintln!("exact-equal: {equal}, mismatch: {mismatches}, skipped-forbidden: {skipped}");
    if mismatches > 0 {
        exit(EXIT_MISMATCH)
    } else {
        ExitCode::SUCCESS
    }
}

pub fn run_single(
    cfg: &ExperimentConfig,
    horizon: usize,
    summary: bool,
    out: &mut dyn Write,
) -> anyhow::Result<ExitCode> {
    let report = compare_with_oracle(&cfg.ics, &cfg.coeffs, horizon)?;
    let trials = [Trial {
        id: 0,
        first_label: cfg.first_label,
        ics: cfg.ics.clone(),
        coeffs: cfg.coeffs.clone(),
        report,
    }];
    emit(&trials, None, horizon, cfg.format, summary, out)?;
    Ok(finish(&trials))
}

/// Seeded random instances; generated sequentially, compared in parallel,
/// reported in trial order.
pub fn run_batch(
    count: usize,
    kind: TrialKind,
    horizon: usize,
    args: &ConfigArgs,
    summary: bool,
    out: &mut dyn Write,
) -> anyhow::Result<ExitCode> {
    eprintln!("seed: {}", args.seed);
    let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
    let instances: Vec<Instance> = (0..count)
        .map(|_| match kind {
            TrialKind::Constant => random_constant_instance(&mut rng),
            TrialKind::Periodic => random_periodic_instance(&mut rng, 2),
            TrialKind::Table => random_table_instance(&mut rng, horizon),
        })
        .collect();
    let trials: Vec<Trial> = instances
        .into_par_iter()
        .enumerate()
        .map(|(id, inst)| {
            let report = compare_with_oracle(&inst.ics, &inst.coeffs, horizon)?;
            Ok(Trial {
                id,
                first_label: 0,
                ics: inst.ics,
                coeffs: inst.coeffs,
                report,
            })
        })
        .collect::<tenrec::Result<_>>()?;
    emit(&trials, Some(args.seed), horizon, args.format, summary, out)?;
    Ok(finish(&trials))
}
