use std::io::Write;
use std::process::ExitCode;

use serde::Serialize;
use tenrec::closed_form::known_case_form;
use tenrec::equivalence::Formula;
use tenrec::{
    iterate, x_backshift, x_closed_a_neg1, x_closed_constant, x_closed_general, BackshiftQuery, ClosedFormQuery,
    Rational,
};

use crate::config::{ConfigError, ExperimentConfig, Format};
use crate::output::{decimal, exit, EXIT_FORBIDDEN, EXIT_MISMATCH};

#[derive(Serialize)]
struct Row {
    formula: &'static str,
    n: i64,
    exact: Option<String>,
    decimal: Option<String>,
    status: String,
}

fn row(formula: &'static str, n: i64, value: Result<Rational, String>) -> Row {
    match value {
        Ok(x) => Row {
            formula,
            n,
            exact: Some(x.to_string()),
            decimal: Some(decimal(&x)),
            status: "ok".into(),
        },
        Err(status) => Row {
            formula,
            n,
            exact: None,
            decimal: None,
            status,
        },
    }
}

fn status(e: tenrec::Error) -> String {
    if e.is_forbidden() {
        "forbidden".into()
    } else {
        e.to_string()
    }
}

pub fn run(cfg: &ExperimentConfig, k: usize, n: usize, out: &mut dyn Write) -> anyhow::Result<ExitCode> {
    if k > 9 {
        return Err(ConfigError::new("--k", "must be in 0..=9").into());
    }
    let index = 10 * n + k;
    let label = cfg.label(index);
    let q = ClosedFormQuery::new(k, n, &cfg.ics, &cfg.coeffs);

    let orbit = iterate(&cfg.ics, &cfg.coeffs, index + 1)?;
    let oracle = orbit.get(index).cloned().ok_or_else(|| "forbidden".to_string());
    let mut rows = vec![row("oracle", label, oracle.clone())];

    for formula in Formula::applicable(&cfg.coeffs) {
        let value = match formula {
            Formula::General => x_closed_general(&q),
            Formula::Constant => x_closed_constant(&q),
            Formula::ANeg1 => x_closed_a_neg1(&q),
            Formula::Backshift | Formula::KnownCase => {
                let (a, b) = cfg.constant_coefficients().expect("constant");
                let bq = BackshiftQuery::from_shifted(&cfg.ics, 9 - k, n, a.clone(), b.clone());
                if formula == Formula::Backshift {
                    x_backshift(&bq)
                } else {
                    known_case_form(&bq).expect("known case")
                }
            }
        };
        rows.push(row(formula.name(), label, value.map_err(status)));
    }

    let mismatch = match &oracle {
        Ok(x) => rows[1..].iter().any(|r| r.exact.as_deref() != Some(&x.to_string())),
        Err(_) => false,
    };

    match cfg.format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["formula", "n", "exact", "decimal", "status"])?;
            for r in &rows {
                w.write_record([
                    r.formula,
                    &r.n.to_string(),
                    r.exact.as_deref().unwrap_or(""),
                    r.decimal.as_deref().unwrap_or(""),
                    &r.status,
                ])?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &rows)?;
            writeln!(out)?;
        }
    }

    Ok(if oracle.is_err() {
        exit(EXIT_FORBIDDEN)
    } else if mismatch {
        exit(EXIT_MISMATCH)
    } else {
        ExitCode::SUCCESS
    })
}
