//! Turns command-line flags into core types.
//!
//! Coefficients given as a periodic list or a file are rows `(a_n, b_n)` of
//! the original recurrence `x_{n+1} = x_{n-9} / (a_n + b_n x_{n-1} ... x_{n-9})`.
//! Orbit positions are labelled by their index in that recurrence, so the
//! shifted seeds `x_0..x_9` carry labels `0..=9` and back-shifted seeds
//! `x_{-9}..x_0` carry labels `-9..=0`. The shifted coefficient at position
//! `m` is `a_{m + first_label + 9}`.

use std::fs;
use std::path::{Path, PathBuf};

use clap::{Args, ValueEnum};
use tenrec::{CoefficientSequence, Figure, InitialConditions, Rational};

/// Invalid configuration, reported with exit code 2.
#[derive(Debug, thiserror::Error)]
#[error("invalid {field}: {message}")]
pub struct ConfigError {
    pub field: &'static str,
    pub message: String,
}

impl ConfigError {
    pub fn new(field: &'static str, message: impl Into<String>) -> Self {
        ConfigError {
            field,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Default)]
pub enum Format {
    #[default]
    Csv,
    Json,
}

#[derive(Debug, Clone, Args, Default)]
pub struct ConfigArgs {
    /// Constant coefficient A (e.g. "2", "-1/3")
    #[arg(long = "A", allow_hyphen_values = true)]
    pub a: Option<String>,

    /// Constant coefficient B
    #[arg(long = "B", allow_hyphen_values = true)]
    pub b: Option<String>,

    /// Periodic coefficients as "a0:b0,a1:b1,..." in original indexing
    #[arg(long, allow_hyphen_values = true, conflicts_with_all = ["coeff_file"])]
    pub periodic: Option<String>,

    /// CSV file of a_n,b_n rows in original indexing
    #[arg(long)]
    pub coeff_file: Option<PathBuf>,

    /// Ten comma-separated rational seeds
    #[arg(long, allow_hyphen_values = true)]
    pub ics: Option<String>,

    /// Seeds taken from the last ten rows of a `simulate` CSV
    #[arg(long, conflicts_with_all = ["ics", "backshift"])]
    pub ics_file: Option<PathBuf>,

    /// Interpret the seeds as x_{-9}..x_0 of the original recurrence
    #[arg(long)]
    pub backshift: bool,

    /// Figure preset (fig1..fig5)
    #[arg(long)]
    pub preset: Option<Figure>,

    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,

    /// Seed for randomized modes
    #[arg(long, default_value_t = 20240917)]
    pub seed: u64,
}

#[derive(Debug, Clone)]
pub struct ExperimentConfig {
    /// Shifted-form coefficients.
    pub coeffs: CoefficientSequence,
    pub ics: InitialConditions,
    /// Label of the first seed in the original indexing.
    pub first_label: i64,
    pub format: Format,
    pub preset: Option<Figure>,
}

impl ExperimentConfig {
    pub fn label(&self, position: usize) -> i64 {
        self.first_label + position as i64
    }

    pub fn constant_coefficients(&self) -> Option<(&Rational, &Rational)> {
        self.coeffs.as_constant()
    }
}

pub fn parse_rational(field: &'static str, s: &str) -> Result<Rational, ConfigError> {
    s.parse().map_err(|e| ConfigError::new(field, format!("{e}")))
}

fn parse_list(field: &'static str, s: &str) -> Result<Vec<Rational>, ConfigError> {
    s.split(',').map(|t| parse_rational(field, t)).collect()
}

fn parse_periodic(s: &str) -> Result<Vec<(Rational, Rational)>, ConfigError> {
    s.split(',')
        .map(|pair| {
            let (a, b) = pair
                .split_once(':')
                .ok_or_else(|| ConfigError::new("--periodic", format!("expected a:b, got {pair:?}")))?;
            Ok((parse_rational("--periodic", a)?, parse_rational("--periodic", b)?))
        })
        .collect()
}

fn read_coeff_file(path: &Path) -> Result<Vec<(Rational, Rational)>, ConfigError> {
    let field = "--coeff-file";
    let text = fs::read_to_string(path).map_err(|e| ConfigError::new(field, format!("{}: {e}", path.display())))?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(false)
        .trim(csv::Trim::All)
        .comment(Some(b'#'))
        .from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for (line, record) in reader.records().enumerate() {
        let record = record.map_err(|e| ConfigError::new(field, e.to_string()))?;
        if record.len() < 2 {
            return Err(ConfigError::new(field, format!("row {} needs two columns", line + 1)));
        }
        match (record[0].parse::<Rational>(), record[1].parse::<Rational>()) {
            (Ok(a), Ok(b)) => rows.push((a, b)),
            // A header row is allowed as the first line.
            _ if line == 0 && rows.is_empty() => continue,
            _ => {
                return Err(ConfigError::new(
                    field,
                    format!("row {}: cannot parse {:?}", line + 1, record.as_slice()),
                ))
            }
        }
    }
    Ok(rows)
}

/// Reads `n,exact,...` rows as written by `simulate` and returns the label of
/// the first of the last ten terms together with those terms.
pub fn read_ics_file(path: &Path) -> Result<(i64, InitialConditions), ConfigError> {
    let field = "--ics-file";
    let text = fs::read_to_string(path).map_err(|e| ConfigError::new(field, format!("{}: {e}", path.display())))?;
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(text.as_bytes());
    let mut rows: Vec<(i64, Rational)> = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| ConfigError::new(field, e.to_string()))?;
        let (Some(n), Some(exact)) = (record.get(0), record.get(1)) else {
            continue;
        };
        // Truncation markers and other non-numeric rows are skipped.
        if let (Ok(n), Ok(x)) = (n.parse::<i64>(), exact.parse::<Rational>()) {
            rows.push((n, x));
        }
    }
    if rows.len() < 10 {
        return Err(ConfigError::new(
            field,
            format!("need at least ten terms, found {}", rows.len()),
        ));
    }
    let tail = &rows[rows.len() - 10..];
    if tail.windows(2).any(|w| w[1].0 != w[0].0 + 1) {
        return Err(ConfigError::new(field, "last ten rows are not consecutive"));
    }
    let values: Vec<Rational> = tail.iter().map(|(_, x)| x.clone()).collect();
    let ics = InitialConditions::from_slice(&values).map_err(|e| ConfigError::new(field, e.to_string()))?;
    Ok((tail[0].0, ics))
}

impl ConfigArgs {
    pub fn build(&self) -> Result<ExperimentConfig, ConfigError> {
        let preset_coeffs = self.preset.map(Figure::coefficients);

        let (first_label, ics) = if let Some(path) = &self.ics_file {
            read_ics_file(path)?
        } else if let Some(list) = &self.ics {
            let values = parse_list("--ics", list)?;
            let ics = if self.backshift {
                InitialConditions::from_backshifted(&values)
            } else {
                InitialConditions::from_slice(&values)
            }
            .map_err(|e| ConfigError::new("--ics", e.to_string()))?;
            (if self.backshift { -9 } else { 0 }, ics)
        } else if let Some(fig) = self.preset {
            (if self.backshift { -9 } else { 0 }, fig.initial_conditions())
        } else {
            return Err(ConfigError::new(
                "--ics",
                "initial conditions are required (or use --preset)",
            ));
        };

        if first_label < -9 {
            return Err(ConfigError::new("--ics-file", "first label must be at least -9"));
        }
        let offset = (first_label + 9) as usize;

        let coeffs = if let Some(list) = &self.periodic {
            CoefficientSequence::periodic(parse_periodic(list)?)
                .map_err(|e| ConfigError::new("--periodic", e.to_string()))?
                .reindexed(offset)
        } else if let Some(path) = &self.coeff_file {
            CoefficientSequence::table(read_coeff_file(path)?).reindexed(offset)
        } else {
            let a = match (&self.a, &preset_coeffs) {
                (Some(s), _) => parse_rational("--A", s)?,
                (None, Some((a, _))) => a.clone(),
                (None, None) => return Err(ConfigError::new("--A", "coefficient A is required")),
            };
            let b = match (&self.b, &preset_coeffs) {
                (Some(s), _) => parse_rational("--B", s)?,
                (None, Some((_, b))) => b.clone(),
                (None, None) => return Err(ConfigError::new("--B", "coefficient B is required")),
            };
            CoefficientSequence::constant(a, b)
        };

        Ok(ExperimentConfig {
            coeffs,
            ics,
            first_label,
            format: self.format,
            preset: self.preset,
        })
    }
}
