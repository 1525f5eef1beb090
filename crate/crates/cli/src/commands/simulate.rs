use std::io::Write;
use std::process::ExitCode;

use serde::Serialize;
use tenrec::{iterate, Error};

use crate::config::{ConfigError, ExperimentConfig, Format};
use crate::output::{decimal, exit, EXIT_FORBIDDEN};

#[derive(Serialize)]
struct Term {
    n: i64,
    exact: String,
    decimal: String,
}

#[derive(Serialize)]
struct SimulateJson {
    terms: Vec<Term>,
    truncated_at: Option<i64>,
}

pub fn run(cfg: &ExperimentConfig, horizon: usize, out: &mut dyn Write) -> anyhow::Result<ExitCode> {
    if horizon < 10 {
        return Err(ConfigError::new("--horizon", "must be at least 10").into());
    }
    let orbit = iterate(&cfg.ics, &cfg.coeffs, horizon).map_err(|e| match e {
        Error::CoefficientsExhausted { .. } => anyhow::Error::from(ConfigError::new("--coeff-file", e.to_string())),
        e => e.into(),
    })?;
    let truncated = orbit.truncated_at.map(|i| cfg.label(i));
    match cfg.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "exact", "decimal"])?;
            for (i, x) in orbit.terms.iter().enumerate() {
                w.write_record([cfg.label(i).to_string(), x.to_string(), decimal(x)])?;
            }
            if let Some(t) = truncated {
                w.write_record([t.to_string(), "forbidden".into(), "forbidden".into()])?;
            }
            w.flush()?;
        }
        Format::Json => {
            let doc = SimulateJson {
                terms: orbit
                    .terms
                    .iter()
                    .enumerate()
                    .map(|(i, x)| Term {
                        n: cfg.label(i),
                        exact: x.to_string(),
                        decimal: decimal(x),
                    })
                    .collect(),
                truncated_at: truncated,
            };
            serde_json::to_writer_pretty(&mut *out, &doc)?;
            writeln!(out)?;
        }
    }
    if let Some(t) = truncated {
        eprintln!("orbit truncated at n={t}: denominator vanished (forbidden set)");
        return Ok(exit(EXIT_FORBIDDEN));
    }
    Ok(ExitCode::SUCCESS)
}
