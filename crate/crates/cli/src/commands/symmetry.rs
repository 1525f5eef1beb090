use std::io::Write;
use std::process::ExitCode;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use tenrec::sampling::random_symmetry_point;
use tenrec::symmetry::{alpha_sum_residual, symmetry_residual, SymmetryCharacteristic};

use crate::config::Format;
use crate::output::{exit, EXIT_MISMATCH};

pub const ALPHA_TOL: f64 = 1e-12;
pub const SYMMETRY_TOL: f64 = 1e-9;
pub const CONTROL_MIN: f64 = 0.1;

#[derive(Serialize)]
struct Row {
    k: u32,
    admissible: bool,
    max_alpha_sum_residual: f64,
    max_symmetry_residual: f64,
    pass: bool,
}

pub fn run(points: usize, max_n: u64, seed: u64, format: Format, out: &mut dyn Write) -> anyhow::Result<ExitCode> {
    eprintln!("seed: {seed}");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples: Vec<_> = (0..points.max(1))
        .map(|i| (random_symmetry_point(&mut rng), i as u64))
        .collect();

    let rows: Vec<Row> = (1..=10)
        .map(|k| {
            let admissible = SymmetryCharacteristic::new(k).is_admissible();
            let max_alpha = (0..=max_n).map(|n| alpha_sum_residual(k, n)).fold(0.0, f64::max);
            let max_sym = samples
                .iter()
                .map(|((point, a, b), n)| symmetry_residual(k, point, a, b, *n).expect("nonsingular sample"))
                .fold(0.0, f64::max);
            let pass = if admissible {
                max_alpha <= ALPHA_TOL && max_sym <= SYMMETRY_TOL
            } else {
                // Negative controls must visibly violate the condition.
                max_alpha > CONTROL_MIN && max_sym > CONTROL_MIN
            };
            Row {
                k,
                admissible,
                max_alpha_sum_residual: max_alpha,
                max_symmetry_residual: max_sym,
                pass,
            }
        })
        .collect();

    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record([
                "k",
                "admissible",
                "max_alpha_sum_residual",
                "max_symmetry_residual",
                "pass",
            ])?;
            for r in &rows {
                w.write_record([
                    r.k.to_string(),
                    r.admissible.to_string(),
                    format!("{:e}", r.max_alpha_sum_residual),
                    format!("{:e}", r.max_symmetry_residual),
                    r.pass.to_string(),
                ])?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, &rows)?;
            writeln!(out)?;
        }
    }
    Ok(if rows.iter().all(|r| r.pass) {
        ExitCode::SUCCESS
    } else {
        exit(EXIT_MISMATCH)
    })
}
