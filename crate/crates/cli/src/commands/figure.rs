use std::io::Write;
use std::process::ExitCode;

use tenrec::{iterate, Figure};

use crate::output::{decimal, exit, EXIT_FORBIDDEN};

pub fn run(fig: Figure, terms: usize, out: &mut dyn Write) -> anyhow::Result<ExitCode> {
    let orbit = iterate(&fig.initial_conditions(), &fig.coefficient_sequence(), terms.max(10))?;
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["n", "decimal"])?;
    for (i, x) in orbit.terms.iter().enumerate() {
        w.write_record([i.to_string(), decimal(x)])?;
    }
    w.flush()?;
    Ok(if orbit.is_truncated() {
        exit(EXIT_FORBIDDEN)
    } else {
        ExitCode::SUCCESS
    })
}
