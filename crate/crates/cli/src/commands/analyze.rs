use std::io::Write;
use std::process::ExitCode;

use serde::Serialize;
use tenrec::analysis::{Classification, FixedPoint, TheoremConditions};
use tenrec::{check_theorem_conditions, iterate, minimal_period, stability, CoefficientSequence, InitialConditions};

use crate::config::{ConfigError, ExperimentConfig};
use crate::output::{exit, roots_json, RootJson, EXIT_FORBIDDEN};

#[derive(Serialize)]
struct ConfigJson<'a> {
    preset: Option<String>,
    coefficients: &'a CoefficientSequence,
    initial_conditions: &'a InitialConditions,
    first_label: i64,
    horizon: usize,
    max_period: usize,
}

#[derive(Serialize)]
struct PeriodJson {
    minimal_period: Option<usize>,
    checked_horizon: usize,
    truncated_at: Option<i64>,
    theorem_conditions: Option<TheoremConditions>,
}

#[derive(Serialize)]
struct FixedPointJson {
    exact: Option<String>,
    approx: f64,
    classification: Classification,
}

#[derive(Serialize)]
struct StabilityJson {
    fixed_points: Vec<FixedPointJson>,
    roots_zero: Vec<RootJson>,
    roots_nonzero: Option<Vec<RootJson>>,
}

#[derive(Serialize)]
struct AnalyzeJson<'a> {
    config: ConfigJson<'a>,
    period: PeriodJson,
    stability: Option<StabilityJson>,
    stability_note: Option<String>,
}

pub fn run(cfg: &ExperimentConfig, horizon: usize, max_period: usize, out: &mut dyn Write) -> anyhow::Result<ExitCode> {
    if horizon < 10 {
        return Err(ConfigError::new("--horizon", "must be at least 10").into());
    }
    let max_period = max_period.clamp(1, horizon / 2);
    let orbit = iterate(&cfg.ics, &cfg.coeffs, horizon)?;
    let constant = cfg.constant_coefficients();

    let minimal = if orbit.is_truncated() {
        None
    } else {
        minimal_period(&orbit, max_period)?.minimal_period
    };
    let period = PeriodJson {
        minimal_period: minimal,
        checked_horizon: orbit.len(),
        truncated_at: orbit.truncated_at.map(|i| cfg.label(i)),
        theorem_conditions: constant.map(|(a, b)| check_theorem_conditions(&cfg.ics, a, b)),
    };

    let (stability_json, note) = match constant {
        None => (None, Some("stability requires constant coefficients".to_string())),
        Some((a, b)) => match stability(a, b) {
            Ok(rep) => (
                Some(StabilityJson {
                    fixed_points: rep
                        .fixed_points
                        .iter()
                        .map(|fp| FixedPointJson {
                            exact: match &fp.point {
                                FixedPoint::Exact(r) => Some(r.to_string()),
                                FixedPoint::Approximate(_) => None,
                            },
                            approx: fp.point.to_f64(),
                            classification: fp.classification,
                        })
                        .collect(),
                    roots_zero: roots_json(&rep.roots_zero),
                    roots_nonzero: rep.roots_nonzero.as_deref().map(roots_json),
                }),
                None,
            ),
            Err(e) => (None, Some(e.to_string())),
        },
    };

    let doc = AnalyzeJson {
        config: ConfigJson {
            preset: cfg.preset.map(|f| f.name().to_string()),
            coefficients: &cfg.coeffs,
            initial_conditions: &cfg.ics,
            first_label: cfg.first_label,
            horizon,
            max_period,
        },
        period,
        stability: stability_json,
        stability_note: note,
    };
    serde_json::to_writer_pretty(&mut *out, &doc)?;
    writeln!(out)?;

    Ok(if orbit.is_truncated() {
        exit(EXIT_FORBIDDEN)
    } else {
        ExitCode::SUCCESS
    })
}
